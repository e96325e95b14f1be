#!/usr/bin/env python3
from hcstable.cli import app

if __name__ == "__main__":
    app()
