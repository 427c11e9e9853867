"""Transcribed instances and labeled graphs used as fixtures and base cases."""
