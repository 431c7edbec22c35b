"""Synthetic task augmentation for multitask molecular property prediction.

Teacher gradient-boosted trees trained on topological descriptors produce
dense synthetic targets that are appended to sparse experimental targets;
a single multitask graph transformer is trained jointly on both.
"""

__version__ = "0.1.0"
