"""Time-scale modification services."""

from .stretch import EmptySegment, SpeedFactor, speed_factor, stretch, stretched_length

__all__ = ["SpeedFactor", "EmptySegment", "speed_factor", "stretch", "stretched_length"]
