import os
import tempfile

collect_ignore = ["setup.py"]


def pytest_configure(config):
    # Keep doctests and tests away from the user's character table cache
    os.environ.setdefault('__PLAID_COXETER_CACHE__', tempfile.mkdtemp(prefix='coxeter-cache-'))
