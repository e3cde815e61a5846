"""
hypergroup_amalgam.log
======================

Daily file + console logger and its process-wide singleton.
"""
