"""
Pure selection rules used by the services and the command.
"""
