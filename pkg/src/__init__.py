"""
HRS tilt engine: abelian groups, tilted hearts and almost-hereditary detection.
"""
