# run.py
# Importing the package loads .env through sabre_mapper.config.
from sabre_mapper.cli import cli


def main():
    cli(prog_name="sabre")


if __name__ == "__main__":
    main()
