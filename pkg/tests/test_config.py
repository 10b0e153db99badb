import os
import tempfile
import unittest
from coxsph import config
from coxsph.config import ConfigError

class TestConfig(unittest.TestCase):

    def test_defaults(self):
        settings = config.load(environ={})
        self.assertEqual(settings['consistencyCap'], 6)
        self.assertEqual(settings['slowCensusOrder'], 2000)
        self.assertEqual(settings['expected']['nonspherical']['A4'], 21)
        self.assertEqual(settings['expected']['nonspherical']['F4'], 1033)
        self.assertEqual(settings['experiments']['upone']['seed'], 2021)

    def test_userFile(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'user.yml')
            with open(path, 'w') as handle:
                handle.write('consistencyCap: 4\nexperiments:\n  upone:\n    samples: 10\n')
            settings = config.load(path, environ={})
        self.assertEqual(settings['consistencyCap'], 4)
        self.assertEqual(settings['experiments']['upone']['samples'], 10)
        self.assertEqual(settings['experiments']['upone']['seed'], 2021)

    def test_environment(self):
        settings = config.load(environ={'COXSPH_ENUM_CAP': '100'})
        self.assertEqual(settings['enumerationCap'], 100)
        self.assertRaises(ConfigError, lambda: config.load(environ={'COXSPH_ENUM_CAP': 'many'}))

    def test_invalidFiles(self):
        self.assertRaises(ConfigError, lambda: config.load('does/not/exist.yml'))
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'list.yml')
            with open(path, 'w') as handle:
                handle.write('- 1\n- 2\n')
            self.assertRaises(ConfigError, lambda: config.readYAML(path))

    def test_merge(self):
        base = {'a': 1, 'b': {'c': 2, 'd': 3}}
        merged = config.merge(base, {'b': {'c': 5}, 'e': 6})
        self.assertEqual(merged, {'a': 1, 'b': {'c': 5, 'd': 3}, 'e': 6})
        self.assertEqual(base['b']['c'], 2)

    def test_settings(self):
        original = config.getSettings()
        try:
            config.setSettings({'consistencyCap': 3})
            self.assertEqual(config.getSettings()['consistencyCap'], 3)
        finally:
            config.setSettings(original)

if __name__ == '__main__':
    unittest.main()
