"""attrex: extract person attributes from incident-report text.

A small library plus CLI that pulls structured attribute/value properties
(gender, race, height, clothing with color descriptors) out of free-text
incident reports without any supervised training: candidate sentences are
retrieved by stacked lexical/semantic similarity, then scanned with a
POS-tag-driven pass that assembles property names and descriptor values.
"""

__version__ = "0.1.0"
