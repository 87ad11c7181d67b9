import logging
import os
import sys

from idealpow.constants import Constants
from utils.runners import run_command

# Usage:
#   python run.py growth --file problems/marc.ideal --ideal I --aux m -e 2 --kmax 4 --format tsv
#   python run.py form-ideal --file problems/infinite.ideal --ideal I
#   python run.py spread --file problems/cover.ideal --ideal I
# Set IDEALPOW_LOG_LEVEL=INFO (or DEBUG) to follow the computation on stderr and
# IDEALPOW_THREADS=n to compute independent rows on n threads.


def configure_logging():
    level = os.environ.get(Constants.log_level_env, "WARNING").upper()
    if not isinstance(logging.getLevelName(level), int):
        level = "WARNING"
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(asctime)s %(levelname)s %(message)s"
    )


if __name__ == "__main__":
    configure_logging()
    sys.exit(run_command(sys.argv[1:]))
