import logging

BASE_LOGGER = logging.getLogger("idealpow")


class Logger:
    """Prefixes every message with the id of the component that logs it."""

    def __init__(self, base_logger: logging.Logger, id: str):
        self.base_logger = base_logger
        self.id = id

    def log(self, level: int, msg: str, thrown: BaseException = None) -> None:
        self.base_logger.log(level, f"{self.id} - {msg}", exc_info=thrown)

    def enabled(self, level: int) -> bool:
        return self.base_logger.isEnabledFor(level)


def get_logger(id: str) -> Logger:
    return Logger(BASE_LOGGER, id)
