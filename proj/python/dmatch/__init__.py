from ._dmatch import *  # noqa: F401,F403
