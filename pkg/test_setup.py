#!/usr/bin/env python3
"""
End-to-end check: every reproduced claim holds, through the same path the CLI takes.
"""
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

import tempfile

from flagphase import DEFAULT_COMMAND_MODULES, main, build_program
from flagphase.command_loader import load_commands
from flagphase.reproduce import raise_for_failures
from flagphase.result import is_ok

# Test configuration
TEST_CONFIG = """
bigcell:
    sweeps: 10
    seed: 7
logging:
    colour: false
reproduce:
    ranks: [2, 3, 4]
    pic0_bound: 20
    pair_bound: 6
    level_bound: 100
"""


def test_end_to_end():
    """Run reproduce-paper from a config file and require every claim to pass"""
    print("Testing end-to-end reproduction...")

    with tempfile.NamedTemporaryFile(mode='w', suffix='.yaml', delete=False) as f:
        f.write(TEST_CONFIG)
        config_path = f.name

    try:
        commands = load_commands(DEFAULT_COMMAND_MODULES).unwrap()
        Program = build_program(commands)
        args = commands["reproduce-paper"].arguments(config=config_path)
        result = main(Program(command=args), commands)
        assert is_ok(result), result
        doc = result.unwrap()
        raise_for_failures(doc)
        assert doc.results["Vol"] == "8"
        assert doc.results["E3.type"] == "TypeIII"
        assert doc.results["E3.Theta_hat"] == "pi"
        assert len(doc.checks) > 30
        print(f"✓ {len(doc.checks)} claims hold")
    finally:
        os.unlink(config_path)


if __name__ == "__main__":
    try:
        test_end_to_end()
    except Exception as e:
        print(f"✗ Error during reproduction: {e}")
        import traceback
        traceback.print_exc()
        sys.exit(1)
    sys.exit(0)
