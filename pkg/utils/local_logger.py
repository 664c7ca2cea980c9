import logging

import config
from toolkit.utils.logger import ROOT_LOGGER, configure_logging


class LocalLogger():
    """
    A named logger for one part of k3ord.

    This logger is intended to be instantiated wherever it is needed.

    Console output goes to stderr so reports on stdout stay clean; a log file
    is written only when config.LOGGING is set.

    :param name: The name of the thing being logged
    :type name: str
    """

    class LogLevels:
        """
        Log levels for the logger

        Higher level = less information

        level 0 will log everything

        level 1 will log everything except debug

        levels:

        0 = DEBUG (ALL)

        1 = INFO

        2 = WARNING

        3 = ERROR

        4 = SETUP
        """

        DEBUG = 0

        INFO = 1

        WARNING = 2

        ERROR = 3

        SETUP = 4

    SETUP_LEVEL = logging.ERROR + 5

    _STDLIB_LEVELS = {
        LogLevels.DEBUG: logging.DEBUG,
        LogLevels.INFO: logging.INFO,
        LogLevels.WARNING: logging.WARNING,
        LogLevels.ERROR: logging.ERROR,
        LogLevels.SETUP: SETUP_LEVEL,
    }

    def __init__(self, name: str):
        self.name = name
        self._logger = logging.getLogger(f'{ROOT_LOGGER}.{name}')

    @classmethod
    def stdlib_level(cls, level: int) -> int:
        """
        Maps a LogLevels value onto a logging module level. Out-of-range
        levels silence the handler.

        :param level: LogLevels value
        :type level: int
        """

        return cls._STDLIB_LEVELS.get(level, logging.CRITICAL + 10)

    @classmethod
    def setup_logging(cls, force: bool = False):
        """
        Configures handlers from the current config values.

        Called lazily on the first message, and again by the CLI after flags
        have been applied.
        """

        logging.addLevelName(cls.SETUP_LEVEL, 'SETUP')
        configure_logging(
            out_level=cls.stdlib_level(config.LOG_OUT_LEVEL),
            file_level=cls.stdlib_level(config.LOG_FILE_LEVEL),
            log_file=config.LOG_FILE if config.LOGGING else None,
            colors=None if config.COLOR else False,
            force=force,
        )

    def __log(self, message, type, level: int, std_out: bool = True):
        """
        Sends a message to the configured handlers.

        This should not be used outside of this class.
        """

        self.setup_logging()
        extra = {'file_only': not std_out}
        prefix = f'|  {type}  |  ' if type else ''
        self._logger.log(self.stdlib_level(level), f'{prefix}{message}', extra=extra)

    def message(self, message: str):
        """
        Logs a message to the file without printing it to the console.

        This does not log a type.

        :param message: The message to log
        """

        self.__log(message, '', self.LogLevels.INFO, False)

    def info(self, message: str, std_out: bool = True):
        """
        Logs an info message.

        :param message: The message to log
        """

        self.__log(message, 'INFO', self.LogLevels.INFO, std_out)

    def debug(self, message: str, std_out: bool = True):
        """
        Logs a debug message.

        :param message: The message to log
        """

        self.__log(message, 'DEBUG', self.LogLevels.DEBUG, std_out)

    def complete(self, message: str, std_out: bool = True):
        """
        Logs a completion message.

        :param message: The message to log
        """

        self.__log(message, 'DONE', self.LogLevels.INFO, std_out)

    def warn(self, message: str, std_out: bool = True):
        """
        Logs a warning message.

        :param message: The message to log
        """

        self.__log(message, 'WARN', self.LogLevels.WARNING, std_out)

    def error(self, message: str, std_out: bool = True):
        """
        Logs an error message.

        This is typically used with a try/except block.

        :param message: The message to log
        """

        self.__log(message, 'ERROR', self.LogLevels.ERROR, std_out)

    def setup(self, message: str, std_out: bool = True):
        """
        Logs a setup message.

        :param message: The message to log
        """

        self.__log(message, 'SETUP', self.LogLevels.SETUP, std_out)
