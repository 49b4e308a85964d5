#!/usr/bin/env python
# coding=utf-8
"""
The JobSpec: one command with its group, automorphism, subsets and output settings.

A JobSpec comes from command line flags or from a JSON document, and ``to_dict`` / ``from_dict`` round trip.
"""

from dataclasses import asdict, dataclass, field, fields

from plaidcloud.coxeter.cli.common import JobError, USAGE_ERROR
from plaidcloud.coxeter.coxcore import InvalidDatumError, build_weyl, parse_subset, parse_word
from plaidcloud.coxeter.orjson import loads

__author__ = 'Paul Morel'
__copyright__ = '© Copyright 2024, Tartan Solutions, Inc'
__credits__ = ['Paul Morel', 'Pat Buxton']
__license__ = 'Apache 2.0'
__maintainer__ = 'Paul Morel'
__email__ = 'paul.morel@tartansolutions.com'


@dataclass
class JobSpec:
    """Everything a command needs.

    Subsets and words are kept as the strings they were given in (``"s1 s3"``, ``"s2 s1"``) and parsed on use.
    """
    command: str
    series: str = None
    rank: int = None
    eps: str = 'id'
    J: str = None
    K: str = None
    K2: str = None
    H: str = None
    w: str = None
    u: str = None
    n: int = None
    k: int = None
    special: str = None
    level: str = 'root'
    groups: list = field(default_factory=list)
    action: str = None
    count: int = None
    params: str = None
    seed: int = 0
    output: str = None
    json: bool = False
    verbosity: int = 0
    id: int = 0

    @classmethod
    def from_dict(cls, payload):
        """Raises:
            JobError: With the usage code for unknown keys or a missing command
        """
        if not isinstance(payload, dict):
            raise JobError('A JobSpec document must be a JSON object', code=USAGE_ERROR)
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(payload) - known)
        if unknown:
            raise JobError(f'Unknown JobSpec keys: {", ".join(unknown)}', data=unknown, code=USAGE_ERROR)
        if not payload.get('command'):
            raise JobError('JobSpec has no command', code=USAGE_ERROR)
        return cls(**payload)

    @classmethod
    def from_file(cls, path):
        try:
            with open(path, 'rb') as spec_file:
                payload = loads(spec_file.read())
        except OSError as exc:
            raise JobError(f'Cannot read JobSpec {path}: {exc}', code=USAGE_ERROR)
        except ValueError as exc:
            raise JobError(f'JobSpec {path} is not valid JSON: {exc}', code=USAGE_ERROR)
        return cls.from_dict(payload)

    def to_dict(self):
        return asdict(self)

    # Parsed views

    def datum(self):
        if not self.series or self.rank is None:
            raise JobError('A group is required: give --type and --rank', code=USAGE_ERROR)
        try:
            return build_weyl(self.series, int(self.rank))
        except InvalidDatumError as exc:
            raise JobError(str(exc), data=self.group_spec(), code=USAGE_ERROR)

    def automorphism(self, datum):
        try:
            return datum.parse_automorphism(self.eps or 'id')
        except (InvalidDatumError, ValueError) as exc:
            raise JobError(str(exc), data={'eps': self.eps}, code=USAGE_ERROR)

    def automorphisms(self, datum):
        """``--eps`` as a ``+`` separated list, e.g. ``triality+flip``."""
        texts = [part.strip() for part in (self.eps or 'id').split('+') if part.strip()]
        try:
            return [datum.parse_automorphism(text) for text in texts]
        except (InvalidDatumError, ValueError) as exc:
            raise JobError(str(exc), data={'eps': self.eps}, code=USAGE_ERROR)

    def subset(self, name, default=None):
        text = getattr(self, name)
        if text is None:
            return default
        try:
            return parse_subset(text)
        except ValueError as exc:
            raise JobError(str(exc), data={name: text}, code=USAGE_ERROR)

    def word(self, name, datum):
        text = getattr(self, name)
        if text is None:
            return None
        try:
            return datum.from_word(parse_word(text))
        except (InvalidDatumError, ValueError) as exc:
            raise JobError(str(exc), data={name: text}, code=USAGE_ERROR)

    def group_spec(self):
        return {'type': self.series, 'rank': self.rank, 'eps': self.eps}

    def require(self, *names):
        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            raise JobError(
                f'{self.command} needs {", ".join("--" + name for name in missing)}', code=USAGE_ERROR
            )
