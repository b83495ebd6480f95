"""
Test package for hopfalgd
"""
