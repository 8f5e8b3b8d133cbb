# -*- coding: utf-8 -*-
import sys
sys.path[0:0] = [""]

import io
import json
import unittest
from fractions import Fraction

from hamgraphon import *

__all__ = ("TestJson",)


class TestJson(unittest.TestCase):

    def test_graphon_to_json(self):
        """Ensure graphons are written with lowest-terms rational strings.
        """
        data = GraphonDocument.from_graphon(get_preset('case-b')).to_json_dict()
        self.assertEqual(data['partition'], ['0', '1/8', '3/8', '3/4', '1'])
        self.assertEqual(data['values'][0], ['0', '1', '0', '0'])
        self.assertFalse('name' in data)

        data = GraphonDocument.from_graphon(get_preset('case-a'),
                                            name='case-a').to_json_dict()
        self.assertEqual(data['name'], 'case-a')
        self.assertEqual(data['values'][3][3], '1/5')

    def test_decimal_strings_are_exact(self):
        """Ensure "0.2" is read as 1/5 and not as a float.
        """
        graphon = GraphonDocument.from_json(
            '{"partition": ["0", "0.5625", 1], "values": [["0.2", 0], '
            '[1, "9/16"]]}').to_graphon()
        self.assertEqual(graphon.partition[1], Fraction(9, 16))
        self.assertEqual(graphon.value(0, 0), Fraction(1, 5))
        self.assertEqual(graphon.value(1, 0), 1)

    def test_unknown_key(self):
        """Ensure undeclared keys are rejected.
        """
        with self.assertRaises(ValidationError) as cm:
            GraphonDocument.from_json({'partition': ['0', '1'],
                                       'values': [['1']], 'colour': 'red'})
        self.assertEqual(list(cm.exception.to_dict()), ['colour'])

    def test_unparseable_value(self):
        with self.assertRaises(ValidationError) as cm:
            GraphonDocument.from_json({'partition': ['0', 'half', '1'],
                                       'values': [['1', '1'], ['1', '1']]})
        self.assertTrue('partition' in cm.exception.to_dict())

        self.assertRaises(ValidationError, GraphonDocument.from_json, '[1, 2]')

    def test_read_write(self):
        """Ensure a graphon written to a file reads back unchanged.
        """
        graphon = get_preset('case-c')
        fp = io.StringIO()
        write_graphon(graphon, fp, name='case-c')
        self.assertEqual(json.loads(fp.getvalue())['name'], 'case-c')
        fp.seek(0)
        self.assertEqual(read_graphon(fp), graphon)

    def test_read_errors(self):
        self.assertRaises(ParseError, read_graphon, io.StringIO('{"partition":'))
        self.assertRaises(ParseError, read_graphon, '/nonexistent/graphon.json')
        self.assertRaises(ValidationError, read_graphon,
                          io.StringIO('{"partition": ["0", "1"]}'))

    def test_witness_to_json(self):
        witness = HamWitness(kind=CYCLE, cycles=[[0, 2, 1, 3]])
        self.assertEqual(json.loads(witness.to_json()),
                         {'kind': 'cycle', 'cycles': [[0, 2, 1, 3]]})
        again = HamWitness.from_json(witness.to_json())
        self.assertEqual(again, witness)


if __name__ == '__main__':
    unittest.main()
