#!/usr/bin/env python3
# launch.py

import sys
import subprocess
import os


def check_dependencies():
    """Check if required dependencies are installed."""
    try:
        import PIL
        import reportlab
        import sympy
        return True
    except ImportError as e:
        print(f"Missing dependency: {e}", file=sys.stderr)
        return False


def install_dependencies():
    """Install required dependencies."""
    print("Installing required dependencies...", file=sys.stderr)
    try:
        subprocess.check_call([sys.executable, "-m", "pip", "install", "-r", "requirements.txt"])
        print("Dependencies installed successfully!", file=sys.stderr)
        return True
    except subprocess.CalledProcessError:
        print("Failed to install dependencies. Please install them manually.", file=sys.stderr)
        print("Run: pip install -r requirements.txt", file=sys.stderr)
        return False


def main():
    """Check dependencies, then run paley-zn with the given arguments."""
    if not check_dependencies():
        if not install_dependencies():
            sys.exit(2)

    # Set up the environment to ensure proper imports
    project_dir = os.path.dirname(os.path.abspath(__file__))
    env = os.environ.copy()
    if "PYTHONPATH" in env:
        env["PYTHONPATH"] = f"{project_dir}{os.pathsep}{env['PYTHONPATH']}"
    else:
        env["PYTHONPATH"] = project_dir

    # Exit codes of the command pass straight through
    result = subprocess.run(
        [sys.executable, os.path.join(project_dir, "paley_zn", "main.py"), *sys.argv[1:]],
        env=env
    )
    sys.exit(result.returncode)


if __name__ == "__main__":
    main()
