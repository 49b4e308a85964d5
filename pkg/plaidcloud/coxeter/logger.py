#!/usr/bin/env python
# coding=utf-8

import logging

__author__ = "Paul Morel"
__copyright__ = "© Copyright 2019-2024, Tartan Solutions, Inc"
__credits__ = ["Paul Morel"]
__license__ = "Apache 2.0"
__email__ = "paul.morel@tartansolutions.com"

# This sets the basic format of our captured logs.  No timestamps, so reports stay reproducible.
LOG_FORMAT = logging.Formatter("%(levelname)-8s %(message)s")
LOCAL_LOG_FORMAT = logging.Formatter("%(asctime)-15s %(levelname)-8s %(message)s")

VERBOSITY_LEVELS = {
    0: logging.WARNING,
    1: logging.INFO,
    2: logging.DEBUG,
}


class LogHandler(logging.Handler):

    def __init__(self, records=None):
        """Collects log records for inclusion in a suite report.

        Args:
            records (list, optional): A list to append to. A fresh list is used if not supplied.
        """
        super(LogHandler, self).__init__()
        self.records = records if records is not None else []

    def emit(self, record):
        try:
            self.records.append({
                'level': record.levelname.lower(),
                'message': self.format(record),
            })
        except:
            logging.exception('Failed to capture log record')


class Logger(logging.Logger):
    """Suite logger: captures records for the report and echoes them to the console"""
    def __init__(self, name='coxeter', verbosity=0, collect=True, stream=None):
        super(Logger, self).__init__(name=name, level=VERBOSITY_LEVELS.get(min(verbosity, 2), logging.WARNING))
        self.log_handler = None
        if collect:
            self.log_handler = LogHandler()
            self.log_handler.setFormatter(LOG_FORMAT)
            self.addHandler(self.log_handler)
        basic_handler = logging.StreamHandler(stream)
        basic_handler.setFormatter(LOCAL_LOG_FORMAT)
        self.addHandler(basic_handler)

    @property
    def records(self):
        if self.log_handler is None:
            return []
        return self.log_handler.records
