class Constants:
    # the ring extension variable of the sharp construction
    sharp_variable = "s"

    # auxiliary elimination variables are t0, t1, ...
    auxiliary_prefix = "t"

    # exponents above this raise ExponentOverflow
    max_exponent = 65535

    default_order = "degrevlex"

    default_kmax = 4

    threads_env = "IDEALPOW_THREADS"
    log_level_env = "IDEALPOW_LOG_LEVEL"


def is_reserved_name(name: str) -> bool:
    if name == Constants.sharp_variable:
        return True
    prefix = Constants.auxiliary_prefix
    return name.startswith(prefix) and name[len(prefix):].isdigit()
