from ._genusforms import *  # noqa: F401,F403
