"""Event-prediction and avoidance-navigation toolkit.

Two independent halves live here:

* a value-gated event pipeline (cue/time/place encoding, echo state network
  prediction, imaginary-potential planning) exercised by a deterministic 2D
  person-crossing simulator, and
* a synthetic training-image generator for object detectors (color
  equalization, anchor compositing, normalized box annotations).
"""

__version__ = "0.1.0"
