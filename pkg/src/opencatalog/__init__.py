"""opencatalog: a self-hostable FAIR metadata catalog engine.

Ingests, validates, deduplicates, curates, publishes, and serves metadata
records describing externally hosted AEC digital resources (datasets,
models, use cases, and open educational resources).
"""

__version__ = "0.1.0"
