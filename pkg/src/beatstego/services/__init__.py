"""Domain services: codec, audio, tsm, embedding, tracking, extraction, detection."""
