import os
import yaml

EXAMPLES_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__)))
s5Nonspherical = os.path.join(EXAMPLES_DIR, 's5_nonspherical.yml')
b3Nonspherical = os.path.join(EXAMPLES_DIR, 'b3_nonspherical.yml')
d4Nonspherical = os.path.join(EXAMPLES_DIR, 'd4_nonspherical.yml')
keyExpansions = os.path.join(EXAMPLES_DIR, 'key_expansions.yml')
elements = os.path.join(EXAMPLES_DIR, 'elements.yml')
examples = {
    's5Nonspherical': s5Nonspherical,
    'b3Nonspherical': b3Nonspherical,
    'd4Nonspherical': d4Nonspherical,
    'keyExpansions': keyExpansions,
    'elements': elements
}

def load(name: str):
    """Load one of the example files by name, e.g. ``load('keyExpansions')``"""
    with open(examples[name], 'r') as handle:
        return yaml.safe_load(handle)
