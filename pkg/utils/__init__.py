from utils.local_logger import LocalLogger
