"""
Tests for the settings store and the report exporter
"""
import enum
import json
import os
import shutil
import sys
import tempfile
import unittest

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from groupdet.utils.export import ReportExporter
from groupdet.utils.settings import DEFAULTS, Settings


class TestSettings(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()
        self.path = os.path.join(self.tmpdir, "nested", "settings.json")

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_defaults(self):
        settings = Settings(self.path)
        self.assertEqual(settings.get('search.box_cap'), 2 ** 26)
        self.assertEqual(settings.get('classify.bound'), 2 ** 63)
        self.assertEqual(settings.get('block.max_index'), 5)
        self.assertIsNone(settings.get('search.missing'))
        self.assertEqual(settings.get('nope.nothing', 7), 7)
        self.assertFalse(os.path.exists(self.path))

    def test_set_persists(self):
        settings = Settings(self.path)
        settings.set('search.chunk_count', 8)
        settings.set('extra.deep.key', "x")
        reloaded = Settings(self.path)
        self.assertEqual(reloaded.get('search.chunk_count'), 8)
        self.assertEqual(reloaded.get('search.box_cap'), 2 ** 26)
        self.assertEqual(reloaded.get('extra.deep.key'), "x")

    def test_defaults_are_not_shared(self):
        settings = Settings(self.path)
        settings.get('search')['box_cap'] = 1
        settings.set('runtime.seed', 9)
        self.assertEqual(DEFAULTS['search']['box_cap'], 2 ** 26)
        self.assertEqual(DEFAULTS['runtime']['seed'], 0)
        self.assertEqual(Settings(os.path.join(self.tmpdir, "other.json")).get('runtime.seed'), 0)

    def test_corrupt_file_falls_back(self):
        os.makedirs(os.path.dirname(self.path))
        with open(self.path, 'w') as f:
            f.write("{not json")
        with self.assertLogs('groupdet.utils.settings', level='WARNING'):
            settings = Settings(self.path)
        self.assertEqual(settings.settings, settings.get_defaults())

    def test_recent_outputs(self):
        settings = Settings(self.path)
        for i in range(12):
            settings.add_recent_output(f"t{i}.jsonl")
        settings.add_recent_output("t5.jsonl")
        recent = settings.get_recent_outputs()
        self.assertEqual(len(recent), 10)
        self.assertEqual(recent[0], "t5.jsonl")
        self.assertEqual(recent.count("t5.jsonl"), 1)


class Color(enum.Enum):
    RED = "red"


class TestReportExporter(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_serializer(self):
        payload = {'n': np.int64(5), 'v': np.array([1, 2]), 'c': Color.RED, 's': {3}}
        self.assertEqual(json.loads(ReportExporter.to_json(payload)),
                         {'n': 5, 'v': [1, 2], 'c': "red", 's': [3]})
        self.assertEqual(ReportExporter.to_json_line({'b': 1, 'a': 2}), '{"a": 2, "b": 1}')

    def test_save_files(self):
        path = os.path.join(self.tmpdir, "out", "report.json")
        self.assertTrue(ReportExporter.save_json(path, {'value': 1}))
        with open(path) as f:
            self.assertEqual(json.load(f), {'value': 1})
        lines_path = os.path.join(self.tmpdir, "rows.jsonl")
        self.assertTrue(ReportExporter.save_jsonl(lines_path, [{'a': 1}, {'a': 2}]))
        with open(lines_path) as f:
            self.assertEqual([json.loads(line) for line in f], [{'a': 1}, {'a': 2}])

    def test_unwritable(self):
        blocker = os.path.join(self.tmpdir, "file")
        with open(blocker, 'w') as f:
            f.write("x")
        with self.assertLogs('groupdet.utils.export', level='ERROR'):
            self.assertFalse(ReportExporter.save_text(os.path.join(blocker, "sub", "a.txt"), "text"))


if __name__ == '__main__':
    unittest.main()
