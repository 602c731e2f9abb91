"""Input validators. Each returns an error message, or None when the input is valid."""
