#!/usr/bin/env python3
"""
Launch script for the Max-TSP solver
Run this file with the same arguments as the `maxtsp` command
"""

import sys
from pathlib import Path


def setup_environment():
    """Setup the Python environment for the solver"""
    script_dir = Path(__file__).parent.absolute()

    # Add src directory to Python path
    src_path = script_dir / 'src'
    if str(src_path) not in sys.path:
        sys.path.insert(0, str(src_path))

    if not src_path.exists():
        print(f"❌ ERROR: src directory not found at {src_path}", file=sys.stderr)
        sys.exit(1)

    required_modules = [
        src_path / 'core' / 'graph_data.py',
        src_path / 'core' / 'pipeline.py',
        src_path / 'cli' / 'main.py',
    ]
    for module_path in required_modules:
        if not module_path.exists():
            print(f"❌ ERROR: Required module not found: {module_path}", file=sys.stderr)
            sys.exit(1)


def check_dependencies():
    """Check if required dependencies are installed"""
    try:
        import networkx
    except ImportError:
        print("❌ ERROR: networkx not installed", file=sys.stderr)
        print("Please install it with: pip install networkx", file=sys.stderr)
        sys.exit(1)
    return networkx.__version__


def main():
    """Main entry point"""
    setup_environment()
    check_dependencies()

    try:
        from cli.main import main as cli_main
    except ImportError as e:
        print(f"❌ Import Error: {e}", file=sys.stderr)
        print("Please check that every package under src/ has its __init__.py", file=sys.stderr)
        sys.exit(1)
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
