#!/usr/bin/env python
# coding=utf-8
"""
Command registration and error packaging for the command line.

Commands are plain functions in :mod:`plaidcloud.coxeter.cli.commands` tagged by :func:`job_command`; a command
name such as ``coset-reps`` is looked up as the function ``coset_reps``.
"""

import logging
from functools import wraps as _wraps

__author__ = 'Paul Morel'
__copyright__ = '© Copyright 2024, Tartan Solutions, Inc'
__credits__ = ['Paul Morel', 'Adams Tower']
__license__ = 'Apache 2.0'
__maintainer__ = 'Paul Morel'
__email__ = 'paul.morel@tartansolutions.com'

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

SCHEMA = 1
COMMAND_MODULE = 'plaidcloud.coxeter.cli.commands'

USAGE_ERROR = 2
CHECK_FAILED = 1


def json_error(message, data=None, code=CHECK_FAILED):
    return {
        'message': message,
        'code': code,
        'data': data,
    }


class JobError(Exception):
    """An error to report as a job failure.

    Other exceptions that make it to the top are reported with the command's default error string.
    """
    def __init__(self, message, data=None, code=CHECK_FAILED):
        super(JobError, self).__init__(message)
        self.message = message
        self.code = code
        self.data = data

    def __str__(self):
        return self.message

    def json_error(self):
        return json_error(self.message, self.data, self.code)


def job_command(default_error=None, description=None):
    """Decorator registering a command function.

    Args:
        default_error (str): Message reported when the command fails with an unexpected exception
        description (str): One line help text for the argument parser

    Returns:
        A decorator function

    Example:
        @job_command('Failed to list coset representatives', 'Minimal coset representatives')
        def coset_reps(spec, log):
            ...
            return report
    """
    def real_decorator(function):
        @_wraps(function)
        def wrapper(spec, log):
            return function(spec, log)

        wrapper.job_command = True
        wrapper.default_error = default_error
        wrapper.description = description or (function.__doc__ or '').strip().split('\n')[0]
        return wrapper

    return real_decorator


def command_function_name(name):
    return name.replace('-', '_')


def get_callable_object(name, module_path=COMMAND_MODULE):
    """Obtains a registered command from its name.

    Args:
        name (str): Command name, e.g. ``coset-reps``

    Returns:
        callable: The decorated command function

    Raises:
        JobError: With the usage code when no such command exists
    """
    if not name:
        raise JobError('No command specified.', code=USAGE_ERROR)
    mod = __import__(module_path, {}, {}, [module_path.split('.')[-1]])
    nonexist_error = JobError(f'Command {name} does not exist.', code=USAGE_ERROR)
    try:
        callable_object = getattr(mod, command_function_name(name))
    except AttributeError:
        raise nonexist_error
    if not getattr(callable_object, 'job_command', False):
        raise nonexist_error
    return callable_object


def command_names(module_path=COMMAND_MODULE):
    mod = __import__(module_path, {}, {}, [module_path.split('.')[-1]])
    return sorted(
        name.replace('_', '-') for name, value in vars(mod).items()
        if callable(value) and getattr(value, 'job_command', False)
    )


class Suite:
    """Collects named checks; the first failure of each check keeps its counterexample."""

    def __init__(self, name, log=None):
        self.name = name
        self.log = log or logger
        self.checked = 0
        self.failures = []

    def check(self, holds, counterexample=None):
        self.checked += 1
        if not holds:
            self.log.warning('%s failed on %s', self.name, counterexample)
            self.failures.append(counterexample)
        return holds

    @property
    def ok(self):
        return not self.failures

    def to_json(self):
        return {
            'name': self.name,
            'ok': self.ok,
            'checked': self.checked,
            'failures': len(self.failures),
            'counterexample': self.failures[0] if self.failures else None,
        }
