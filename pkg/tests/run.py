import os
import sys
import unittest

# Run from the root dir with >python ./tests/run.py
# Install the package first (>pip install .[test] or
# >pip install -e .[test]  for dev/edit mode)
if __name__ == "__main__":
    here = os.path.dirname(os.path.abspath(__file__))
    sys.path.insert(0, here)
    tests = unittest.defaultTestLoader.discover(here)
    runner = unittest.TextTestRunner(verbosity=2 if "-v" in sys.argv else 1)
    result = runner.run(tests)
    sys.exit(0 if result.wasSuccessful() else 1)
