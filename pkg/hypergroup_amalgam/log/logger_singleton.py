import atexit
import os
import threading

from dotenv import load_dotenv

from hypergroup_amalgam.log.logger import Logger

_logger = None
_registered = False
_lock = threading.Lock()


def getLogger():
    global _logger, _registered
    with _lock:
        if _logger is None:
            load_dotenv()
            _logger = Logger(log_dir=os.getenv("HYPERGROUP_LOG_DIR", "logs"))
        if not _registered:
            atexit.register(lambda: _logger.flush())
            _registered = True
    return _logger
