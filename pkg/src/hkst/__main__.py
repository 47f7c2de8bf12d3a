"""Allow `python -m hkst`."""

from hkst.cli import run

if __name__ == "__main__":
    run()
