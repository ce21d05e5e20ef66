import unittest
from unittest.mock import patch

# Module to test
from src.utils import error_utils


class TestErrorUtils(unittest.TestCase):

    def test_config_error_names_location(self):
        """ConfigError carries and prints section, field and line."""
        err = error_utils.ConfigError("Missing required value", "noise", "g", 4)
        self.assertIn("section [noise]", str(err))
        self.assertIn("field 'g'", str(err))
        self.assertIn("line 4", str(err))
        self.assertEqual((err.section, err.field, err.line), ("noise", "g", 4))

    def test_missing_setting_error_message(self):
        """MissingSettingError is a KeyError with a readable message."""
        err = error_utils.MissingSettingError(0.0, 0.0, "+z", 1)
        self.assertIsInstance(err, KeyError)
        self.assertIn("n=+z", str(err))
        self.assertIn("j=1", str(err))

    def test_hierarchy(self):
        """Validation errors are ValueErrors; step-size errors are validation errors."""
        self.assertTrue(issubclass(error_utils.ValidationError, ValueError))
        self.assertTrue(issubclass(error_utils.StepSizeError, error_utils.ValidationError))
        self.assertTrue(issubclass(error_utils.UnsupportedVariantError, TypeError))
        self.assertEqual(error_utils.NumericalError("x", achieved=1e-3).achieved, 1e-3)

    @patch('src.utils.error_utils.logger')
    def test_log_error_appends_context(self, mock_logger):
        """Context pairs are appended; None values are skipped."""
        error_utils.log_error("boom", command="chsh", config=None)
        message = mock_logger.error.call_args[0][0]
        self.assertEqual(message, "ERROR: boom | command: chsh")


if __name__ == '__main__':
    unittest.main()
