"""Skew Schur expansions, supports and Schur-positivity posets on skew shapes."""
