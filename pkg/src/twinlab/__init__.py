"""Twin root data for trees and right-angled Fuchsian buildings, computed exactly."""

__version__ = "0.1.0"
