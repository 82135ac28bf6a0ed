"""Desk-scale retinal biomarker grounding pipeline.

Synthetic paired OCT/fundus cohorts with known biomarkers, contrastive
image-biomarker alignment, projection into a tiny autoregressive report
decoder, and a deterministic rubric grader for the generated reports.
"""

__version__ = "0.1.0"
