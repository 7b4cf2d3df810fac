"""Headless companion: validate designs, batch-rehearse personas, export transcripts."""
