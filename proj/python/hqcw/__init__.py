from ._hqc import *  # noqa: F401,F403
