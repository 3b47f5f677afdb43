__version__ = "0.1.0"
__motd__ = "exact phases, no floats harmed"
