#!/usr/bin/env python3
"""
Spectral GoF - Command Line Entry Point

Usage:
    python run.py test --method srpt --null uniform --data sample.csv
    python run.py power --config experiments.json --out power.csv
    python run.py reproduce fig1 --out-dir results/
"""

from spectral_gof.cli import run

if __name__ == "__main__":
    run()
