"""renas: recommends identifiers that should be renamed together.

Given a Java project and one rename performed by a developer, renas scores
every related identifier by combining word-overlap similarity with the
distance on a typed relationship graph, and recommends the ones worth
co-renaming.
"""

__version__ = "0.1.0"
