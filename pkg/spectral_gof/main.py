"""
Spectral GoF - Main entry point
Run this file to use the command line interface
"""

from spectral_gof.cli import run

if __name__ == "__main__":
    run()
