import unittest


class TableTestCase(unittest.TestCase):
    """
    Test case with support for data-driven case tables

    """
    def _run_cases(self, test, test_data):
        """
        Runs a callable against a table of cases

        Parameters
        ----------
        test: callable
            The function under test
        test_data: dict
            Case name -> record with the layout

            "<case>": {
                          "args": <list> | <dict>,
                          "expect": <object> | <exception type>,
                          ["assert"]: <function>,
                          ["assert_params"]: <dict>
                      }

            "args" are expanded positionally (list) or by keyword
            (dict). An exception type as "expect" means the call must
            raise it. "assert" is a two-argument assertion of the form
            (result, expected) and defaults to assertEqual.

        """
        def is_except_type(t):
            return isinstance(t, type) and issubclass(t, BaseException)

        def call(args):
            if isinstance(args, dict):
                return test(**args)
            return test(*args)

        for name, case in test_data.items():
            args = case["args"]
            expected = case["expect"]
            assertion = case.get("assert", self.assertEqual)
            params = case.get("assert_params", {})
            msg = "{} failed".format(name)

            try:
                if is_except_type(expected):
                    with self.assertRaises(expected, msg=msg):
                        call(args)
                else:
                    assertion(call(args), expected, msg=msg, **params)
            except Exception as exc:
                # Pinpoint the case, the table is not inline with the test
                if not isinstance(exc, AssertionError):
                    print("\n\nError in test case '{}'\n"
                          "  test: {}\n"
                          "  input: {}\n"
                          "  msg: {}\n"
                          "  args: {}\n".
                          format(self.__class__.__name__,
                                 getattr(test, "__name__", test),
                                 name, exc, args))
                raise

    def assertAllClose(self, result, expected, msg=None, atol=1e-9):
        """Element-wise comparison of two sequences of floats"""
        result, expected = list(result), list(expected)
        self.assertEqual(len(result), len(expected), msg=msg)
        for i, (a, b) in enumerate(zip(result, expected)):
            if abs(a - b) > atol:
                self.fail("{}: item {} differs, {!r} != {!r} (atol {})"
                          .format(msg or "sequences differ", i, a, b, atol))
