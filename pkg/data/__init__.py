"""
Text/JSON codecs and Cayley table files.
"""
