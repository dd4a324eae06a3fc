"""Catalogued weight-six depth-reduction identities.

Each entry maps a name to a tuple of blocks
(n0, indices, ((coeff, args), ...)); the first block is the
combination being reduced and the remaining blocks give its
lower-depth equivalent.  Coefficients are strings accepted by
Fraction, arguments are strings accepted by parse_ratfunc.
"""

IDENTITY_TABLES = {
    'revinv': (
        (3, (1, 1, 1), (
            ('1', ('((1)/(Z))', '((1)/(Y))', '((1)/(X))')),
            ('1', ('X', 'Y', 'Z')),
        )),
        (4, (1, 1), (
            ('1', ('X', 'Y')),
            ('-1', ('Y', 'Z')),
        )),
        (5, (1,), (
            ('-1', ('X',)),
            ('1', ('Y',)),
        )),
    ),
    'rev': (
        (3, (1, 1, 1), (
            ('1', ('X', 'Y', 'Z')),
            ('-1', ('Z', 'Y', 'X')),
        )),
        (3, (1, 2), (
            ('-1', ('X', 'Y*Z')),
            ('1', ('Z', 'X*Y')),
        )),
    ),
    'inv': (
        (3, (1, 1, 1), (
            ('1', ('((1)/(X))', '((1)/(Y))', '((1)/(Z))')),
            ('1', ('X', 'Y', 'Z')),
        )),
        (3, (1, 2), (
            ('-1', ('X', 'Y*Z')),
            ('1', ('X*Y', 'Z')),
        )),
        (4, (1, 1), (
            ('4', ('X*Y', 'Z')),
            ('1', ('X', 'Y')),
            ('-1', ('Y', 'Z')),
        )),
        (5, (1,), (
            ('-10', ('X*Y*Z',)),
            ('-5', ('X*Y',)),
            ('5', ('Y*Z',)),
            ('1', ('Y',)),
            ('-1', ('Z',)),
        )),
    ),
    'sh21': (
        (3, (1, 1, 1), (
            ('1', ('Z', 'X1', 'X2')),
            ('1', ('X1', 'Z', 'X2')),
            ('1', ('X1', 'X2', 'Z')),
        )),
        (3, (1, 2), (
            ('-1', ('X1', 'Z*X2')),
            ('1', ('Z*X1', 'X2')),
        )),
        (4, (1, 1), (
            ('4', ('Z*X1', 'X2')),
        )),
    ),
    'three': (
        (3, (1, 1, 1), (
            ('1', ('X', 'Y', 'Z')),
            ('1', ('Y', 'Z', 'X')),
            ('1', ('Z', 'X', 'Y')),
        )),
        (5, (1,), (
            ('10', ('X*Y*Z',)),
        )),
    ),
    'nielsen_11a': (
        (3, (1, 1, 1), (
            ('1', ('1', '1', 'A')),
        )),
        (4, (1, 1), (
            ('1', ('1', '-((1-A)/(A))')),
            ('2', ('1', 'A')),
        )),
        (5, (1,), (
            ('-1', ('-((1-A)/(A))',)),
            ('-1', ('1-A',)),
            ('-3', ('A',)),
        )),
    ),
    'degsym1': (
        (3, (1, 1, 1), (
            ('1', ('1', 'A', 'B')),
            ('-1', ('1', '((A*(1-B))/(1-A*B))', '-((1-A*B)/(A*B))')),
        )),
        (3, (1, 2), (
            ('-1', ('((A*(1-B))/(1-A*B))', '-((1-A*B)/(A*B))')),
            ('1', ('-((1-A)/(A*(1-B)))', 'A*B')),
            ('-1', ('1', '-(((1-A)*B)/(1-B))')),
            ('1', ('1-A', '-((B)/(1-B))')),
            ('1', ('1', '-((1-B)/(B))')),
        )),
        (4, (1, 1), (
            ('-2', ('((A*(1-B))/(1-A*B))', '-((1-A*B)/(A*B))')),
            ('-1', ('-((A*B)/(1-A*B))', '((1-A*B)/(1-A))')),
            ('2', ('-((1-A)/(A*(1-B)))', 'A*B')),
            ('2', ('1', '-((A*(1-B))/(1-A))')),
            ('-4', ('1', '-(((1-A)*B)/(1-B))')),
            ('2', ('1-A', '-((B)/(1-B))')),
            ('1', ('-((A)/(1-A))', 'B')),
            ('-2', ('1', '-((1-A)/(A))')),
            ('2', ('1', '-((1-B)/(B))')),
            ('2', ('1', 'A*B')),
            ('-1', ('1', 'A')),
            ('1', ('A', 'B')),
        )),
        (5, (1,), (
            ('-3', ('-((A*(1-B))/(1-A))',)),
            ('5', ('-(((1-A)*B)/(1-B))',)),
            ('1', ('((1-A)/(1-A*B))',)),
            ('-2', ('-((A*B)/(1-A*B))',)),
            ('5', ('-((A*B)/(1-A))',)),
            ('-3', ('-((1-B)/(B))',)),
            ('5', ('-((1-A)/(A))',)),
            ('-1', ('1-A',)),
            ('-5', ('A*B',)),
            ('3', ('A',)),
        )),
    ),
    'onevar': (
        (3, (1, 1, 1), (
            ('1', ('1', 'A', '((1)/(A))')),
        )),
        (3, (1, 2), (
            ('1', ('((1)/(1-A))', '1-A')),
            ('1', ('1', '1-A')),
        )),
        (4, (1, 1), (
            ('1', ('-((1-A)/(A))', 'A')),
            ('-2', ('1', '-((1-A)/(A))')),
            ('2', ('1', '1-A')),
            ('-1', ('1', 'A')),
        )),
        (5, (1,), (
            ('4', ('-((1-A)/(A))',)),
            ('-6', ('1-A',)),
            ('-10', ('-(1-A)',)),
            ('5', ('A',)),
        )),
    ),
    'degsym2': (
        (3, (1, 1, 1), (
            ('1', ('1', 'A', 'B')),
            ('1', ('1', 'A', '((1-A*B)/(A*(1-B)))')),
        )),
        (3, (1, 2), (
            ('1', ('-((A)/(1-A))', '(((1-A)*B)/(1-A*B))')),
            ('1', ('-((1-A)/(A))', '-((A*B)/(1-A*B))')),
            ('-1', ('-((1-A)/(A))', '-((A)/(1-A))')),
            ('1', ('((1)/(A))', '((A*(1-B))/(1-A*B))')),
            ('-1', ('1', '((1-B)/(1-A*B))')),
            ('-1', ('1', '-((1-A)/(A))')),
            ('-1', ('1', 'A*B')),
            ('1', ('A', 'B')),
        )),
        (4, (1, 1), (
            ('1', ('-((1-B)/((1-A)*B))', '-((A*B)/(1-A*B))')),
            ('2', ('-((A)/(1-A))', '(((1-A)*B)/(1-A*B))')),
            ('-1', ('((1)/(1-A))', '((A*(1-B))/(1-A*B))')),
            ('2', ('-((1-A)/(A))', '-((A*B)/(1-A*B))')),
            ('-1', ('(((1-A)*B)/(1-A*B))', '1-A*B')),
            ('1', ('-((1-B)/((1-A)*B))', 'A*B')),
            ('-1', ('((1-B)/(1-A*B))', '1-A*B')),
            ('2', ('((1)/(A))', '((A*(1-B))/(1-A*B))')),
            ('-1', ('1', '((1-B)/(1-A*B))')),
            ('-2', ('1', '-((1-A)/(A))')),
            ('-1', ('1-A', 'B')),
            ('2', ('1', '1-A')),
            ('-1', ('1', 'A*B')),
            ('2', ('1', 'A')),
            ('2', ('A', 'B')),
        )),
        (5, (1,), (
            ('-5', ('((A*(1-B))/((1-A)*(1-A*B)))',)),
            ('-1', ('((A*(1-B))/(1-A*B))',)),
            ('-2', ('(((1-A)*B)/(1-A*B))',)),
            ('-3', ('-((A*(1-B))/(1-A))',)),
            ('-3', ('((1-B)/(1-A*B))',)),
            ('-1', ('-((1-A)/(A))',)),
            ('10', ('(1-A)*B',)),
            ('-2', ('1-A*B',)),
            ('3', ('1-B',)),
            ('-5', ('1-A',)),
            ('3', ('A*B',)),
            ('-1', ('A',)),
            ('-3', ('B',)),
        )),
    ),
    'one_a_b': (
        (3, (1, 1, 1), (
            ('1', ('1', 'A', 'B')),
        )),
        (3, (1, 2), (
            ('1/2', ('-((1-A)/(A))', '-((A*(1-B))/(1-A))')),
            ('1/2', ('-((A)/(1-A))', '(((1-A)*B)/(1-A*B))')),
            ('1/2', ('-((B)/(1-B))', '((A*(1-B))/(1-A*B))')),
            ('1/2', ('((1)/(1-B))', '-((A*(1-B))/(1-A))')),
            ('-1/2', ('-((1-B)/((1-A)*B))', 'A*B')),
            ('1/2', ('((1-B)/(1-A*B))', '1-A*B')),
            ('-1/2', ('1-A', '((1-A*B)/(1-A))')),
            ('1/2', ('1', '-((A*(1-B))/(1-A))')),
            ('1/2', ('1', '((A*(1-B))/(1-A*B))')),
            ('1/2', ('1', '(((1-A)*B)/(1-A*B))')),
            ('-1/2', ('A', '((1-B)/(1-A*B))')),
            ('-1/2', ('B', '((1-A)/(1-A*B))')),
            ('-1/2', ('1', '-((A*B)/(1-A*B))')),
            ('-1/2', ('((1)/(1-A))', '1-A*B')),
            ('1/4', ('((1)/(1-A))', '1-A')),
            ('-1/2', ('1', '1-B')),
            ('-1/2', ('1', 'A*B')),
            ('1/2', ('A', 'B')),
        )),
        (4, (1, 1), (
            ('1/2', ('((A*(1-B))/(1-A*B))', '-((1-A*B)/(A*B))')),
            ('-1/2', ('-((A*B)/(1-A*B))', '((1-A*B)/(1-A))')),
            ('1', ('-((1-A)/(A))', '-((A*(1-B))/(1-A))')),
            ('1', ('-((A)/(1-A))', '(((1-A)*B)/(1-A*B))')),
            ('1', ('-((B)/(1-B))', '((A*(1-B))/(1-A*B))')),
            ('1/2', ('-((1-A)/(A))', '((1-A*B)/(1-B))')),
            ('1/2', ('-((1-B)/(B))', '((1-A*B)/(1-A))')),
            ('-1/2', ('-((1-A)/(A*(1-B)))', '1-A*B')),
            ('-1/2', ('-((1-B)/((1-A)*B))', '1-A*B')),
            ('1', ('((1)/(1-B))', '-((A*(1-B))/(1-A))')),
            ('-1/2', ('(((1-A)*B)/(1-A*B))', '1-A*B')),
            ('-1/2', ('-((1-A)/(A*(1-B)))', 'A*B')),
            ('1/2', ('((1-B)/(1-A*B))', '1-A*B')),
            ('-1', ('-((1-B)/((1-A)*B))', 'A*B')),
            ('1/2', ('1-A', '((1-B)/(1-A*B))')),
            ('1/2', ('1-B', '((1-A)/(1-A*B))')),
            ('-1', ('1-A', '((1-A*B)/(1-A))')),
            ('3/2', ('1', '((A*(1-B))/(1-A*B))')),
            ('2', ('1', '-((A*(1-B))/(1-A))')),
            ('2', ('1', '(((1-A)*B)/(1-A*B))')),
            ('1/2', ('1', '((1-B)/(1-A*B))')),
            ('-1/2', ('A', '((1-B)/(1-A*B))')),
            ('-1/2', ('B', '((1-A)/(1-A*B))')),
            ('-1', ('((1)/(1-A))', '1-A*B')),
            ('-2', ('1', '-((A*B)/(1-A*B))')),
            ('1/2', ('-((A)/(1-A))', 'B')),
            ('-1', ('1', '-((1-A)/(A))')),
            ('-1/2', ('1-A', 'B')),
            ('-2', ('1', '1-B')),
            ('-1/2', ('1', 'A*B')),
            ('-1/2', ('1', 'B')),
            ('3/2', ('A', 'B')),
        )),
        (5, (1,), (
            ('5/2', ('-((A*(1-B))/((1-A)*(1-A*B)))',)),
            ('5/2', ('-(((1-A)*B)/((1-B)*(1-A*B)))',)),
            ('-5', ('(((1-A)*(1-B))/(1-A*B))',)),
            ('-1/2', ('-(((1-A)*B)/(1-B))',)),
            ('-4', ('((A*(1-B))/(1-A*B))',)),
            ('-5', ('(((1-A)*B)/(1-A*B))',)),
            ('-11/2', ('-((A*(1-B))/(1-A))',)),
            ('-1/2', ('((1-B)/(1-A*B))',)),
            ('1', ('((1-A)/(1-A*B))',)),
            ('5/2', ('-((A*B)/(1-A*B))',)),
            ('5/2', ('-((A*B)/(1-A))',)),
            ('-1/2', ('-((1-B)/(B))',)),
            ('5/2', ('-((1-A)/(A))',)),
            ('5', ('(1-A)*B',)),
            ('-1/2', ('1-A*B',)),
            ('-1/4', ('1-A',)),
            ('5', ('1-B',)),
            ('2', ('A*B',)),
            ('1', ('A',)),
        )),
    ),
    'a_one_b': (
        (3, (1, 1, 1), (
            ('1', ('A', '1', 'B')),
        )),
        (3, (1, 2), (
            ('-1', ('((1)/(A))', 'A*B')),
            ('-1', ('((1)/(B))', 'A*B')),
            ('-1', ('A', 'B')),
        )),
        (4, (1, 1), (
            ('-1', ('1-A', '-((B)/(1-B))')),
            ('1', ('-((A)/(1-A))', '1-B')),
            ('1', ('1', '-((1-B)/(B))')),
            ('-1', ('1', '1-A')),
            ('-2', ('((1)/(A))', 'A*B')),
            ('-2', ('((1)/(B))', 'A*B')),
            ('-1', ('1', 'A')),
        )),
        (5, (1,), (
            ('-2', ('-((A*(1-B))/(1-A))',)),
            ('3', ('-(((1-A)*B)/(1-B))',)),
            ('1', ('-((1-A)/(A))',)),
            ('-1', ('-((1-B)/(B))',)),
            ('2', ('1-A',)),
            ('2', ('A',)),
        )),
    ),
    'fullsym1': (
        (3, (1, 1, 1), (
            ('1', ('A', 'B', 'C')),
            ('1', ('1-A', '((B)/(B-1))', '1-C')),
        )),
        (3, (1, 1, 1), (
            ('-1', ('1', '-(((1-A-C+A*B*C))/(A*(1-B)*C))', '-((1-B)/(B*(1-A-C+A*B*C)))')),
            ('1', ('1', '(((1-A)*(1-C))/((1-A-C+A*B*C)))', '-((B*(1-A-C+A*B*C))/(1-B))')),
            ('1', ('1-C', '1', '((1-A*B)/(A*(1-B)))')),
            ('-1', ('1', '1-A', '-((B*(1-C))/(1-B))')),
            ('-1', ('1', '1-C', '-(((1-A)*B)/(1-B))')),
            ('-1', ('((1-C)/(1-B*C))', '1', '((1)/(A))')),
            ('-1', ('1-C', '1', '-((B)/(1-B))')),
            ('1', ('1', '((1)/(A))', '((1)/(B*C))')),
            ('1', ('1', '((1)/(C))', '((1)/(A*B))')),
            ('1', ('((1)/(B))', '1', '((1)/(A))')),
        )),
        (3, (1, 2), (
            ('-1', ('(((1-A)*(1-C))/((1-A-C+A*B*C)))', '-((B*(1-A-C+A*B*C))/(1-B))')),
            ('1', ('-(((1-A)*B)/(1-B))', '1-C')),
            ('1', ('1', 'A*B*C')),
            ('-1', ('A', 'B*C')),
        )),
        (4, (1, 1), (
            ('-1', ('(((1-A)*(1-C))/((1-A-C+A*B*C)))', '-((B*(1-A-C+A*B*C))/(1-B))')),
            ('2', ('-((A*(1-B)*C)/((1-A-C+A*B*C)))', '-((B*(1-A-C+A*B*C))/(1-B))')),
            ('1', ('1', '-((A*(1-B)*C)/((1-A-C+A*B*C)))')),
            ('1', ('((1)/(1-A))', '(((1-B)*C)/(1-B*C))')),
            ('2', ('((A*(1-B))/(1-A*B))', '((1)/(1-C))')),
            ('1', ('1-A', '-((B*(1-C))/(1-B))')),
            ('3', ('-(((1-A)*B)/(1-B))', '1-C')),
            ('-1', ('1', '(((1-B)*C)/(1-B*C))')),
            ('-1', ('1', '((1-A)/(1-A*B))')),
            ('-1', ('1', '((1-C)/(1-B*C))')),
            ('-1', ('((1-A*B)/(1-A))', 'C')),
            ('-2', ('A', '((1-B*C)/(1-C))')),
            ('-3', ('-((B)/(1-B))', '1-C')),
            ('1', ('1', '1-A')),
            ('1', ('1', '1-C')),
            ('-2', ('A', 'B*C')),
            ('2', ('A*B', 'C')),
            ('1', ('1', 'B')),
            ('3', ('A', 'B')),
        )),
        (5, (1,), (
            ('-4', ('-((A*(1-B)*C)/((1-A-C+A*B*C)))',)),
            ('-2', ('(((1-B)*C)/((1-A)*(1-B*C)))',)),
            ('-3', ('((A*(1-B))/((1-A*B)*(1-C)))',)),
            ('5', ('-((B*(1-A-C+A*B*C))/(1-B))',)),
            ('-5', ('-(((1-A)*B*(1-C))/(1-B))',)),
            ('-2', ('((A*(1-B))/(1-A*B))',)),
            ('2', ('(((1-A*B)*C)/(1-A))',)),
            ('2', ('(((1-B)*C)/(1-B*C))',)),
            ('3', ('((A*(1-B*C))/(1-C))',)),
            ('9', ('-((B*(1-C))/(1-B))',)),
            ('1', ('((1-A)/(1-A*B))',)),
            ('4', ('((1-C)/(1-B*C))',)),
            ('-1', ('1-A',)),
            ('-4', ('1-C',)),
            ('-5', ('A*B*C',)),
            ('1', ('B*C',)),
            ('-5', ('A*B',)),
            ('2', ('A',)),
            ('2', ('C',)),
        )),
    ),
    'fourterm': (
        (3, (1, 1, 1), (
            ('1', ('A', '((1)/(B))', '1-C')),
            ('1', ('A', '((1)/(B))', 'C')),
            ('-1', ('A', '((C)/(B))', '((1-B)/(1-C))')),
            ('-1', ('A', '((C)/(B))', '((1-C)/(1-B))')),
        )),
        (3, (1, 1, 1), (
            ('1', ('1', '((A*(1-B)*(1-C))/((A-A*B-A*C+B*C)))', '(((A-A*B-A*C+B*C))/((1-B)*B))')),
            ('-1', ('1', '(((A-A*B-A*C+B*C))/((1-A)*B*C))', '(((1-B)*B)/((A-A*B-A*C+B*C)))')),
            ('1', ('1', '(((A+B-A*B-A*C))/((1-A)*B))', '(((1-B)*B)/(C*(A+B-A*B-A*C)))')),
            ('-1', ('1', '((A*(1-C))/((A+B-A*B-A*C)))', '((C*(A+B-A*B-A*C))/((1-B)*B))')),
            ('-1', ('1', '((A*(1-B))/(A-B))', '(((A-B)*C)/(B*(1-C)))')),
            ('-1', ('1', '-((1-B)/(B-C))', '-((B-C)/((1-A)*C))')),
            ('-1', ('((1-C)/(1-B))', '1', '((B-A*C)/((1-A)*B))')),
            ('-1', ('1', '((A*(1-B))/(A-B))', '-((A-B)/(B-A*C))')),
            ('1', ('1', '((A*(B-C))/(B-A*C))', '-((1-B)/(B-C))')),
            ('-1', ('(((1-B)*(1-C))/(1-B-C))', '1', '((1)/(1-A))')),
            ('1', ('1', '((A*(1-B))/(A-B))', '-((A-B)/(B))')),
            ('-1', ('1', '-((B-C)/(C))', '-((1-B)/(B-C))')),
            ('1', ('((1-C)/(1-B-C))', '1', '((1)/(1-A))')),
            ('1', ('1-C', '1', '-((A-B)/((1-A)*B))')),
            ('1', ('1', '((1-B)/(1-C))', '((A*C)/(B))')),
            ('1', ('1', '((1-C)/(1-B))', '((A*C)/(B))')),
            ('1', ('1', 'A', '(((1-B)*C)/(B*(1-C)))')),
            ('1', ('1', 'A', '(((1-C)*C)/((1-B)*B))')),
            ('1', ('((1-C)/(1-B))', '1', '((C)/(B))')),
            ('-1', ('-((B-C)/(C))', '1', '((1)/(1-A))')),
            ('1', ('1', '((1)/(C))', '((1-B)/(1-A))')),
            ('1', ('1-B', '1', '((1)/(1-A))')),
            ('-1', ('1', 'A', '-((1-B)/(B))')),
            ('-1', ('1', 'A', '((1-C)/(B))')),
            ('-1', ('1', '1-C', '((A)/(B))')),
            ('1', ('1', '1-B', '((1)/(C))')),
            ('-1', ('1-C', '1', '((1)/(B))')),
            ('1', ('A', '1', '((C)/(B))')),
        )),
        (3, (1, 2), (
            ('-1', ('((A*(1-B)*(1-C))/((A-A*B-A*C+B*C)))', '(((A-A*B-A*C+B*C))/((1-B)*B))')),
            ('1', ('((A*(1-C))/((A+B-A*B-A*C)))', '((C*(A+B-A*B-A*C))/((1-B)*B))')),
            ('1', ('((A*(1-B))/(A-B))', '(((A-B)*C)/(B*(1-C)))')),
            ('1', ('((A*(1-B))/(A-B))', '-((A-B)/(B-A*C))')),
            ('1', ('-((B-C)/(1-B))', '-(((1-A)*C)/(B-C))')),
            ('-1', ('((A*(1-B))/(A-B))', '-((A-B)/(B))')),
            ('-1', ('(((1-A)*B)/(A*(1-B)))', '((A*C)/(B))')),
            ('-1', ('((1-B)/(1-C))', '((A*C)/(B))')),
            ('-1', ('((1-C)/(1-B))', '((A*C)/(B))')),
            ('-1', ('1', '-((A*(1-B))/(B-A*C))')),
            ('-1', ('1-A', '((C)/(1-B))')),
            ('1', ('1', '-((A*(1-B))/(B))')),
            ('1', ('1', '((1-B)/(C))')),
            ('1', ('((A)/(B))', '1-C')),
            ('-1', ('((1)/(1-B))', 'C')),
        )),
        (4, (1, 1), (
            ('-1', ('((A*(1-B)*(1-C))/((A-A*B-A*C+B*C)))', '(((A-A*B-A*C+B*C))/((1-B)*B))')),
            ('2', ('(((1-A)*B*C)/((A-A*B-A*C+B*C)))', '(((A-A*B-A*C+B*C))/((1-B)*B))')),
            ('1', ('((A*(1-C))/((A+B-A*B-A*C)))', '((C*(A+B-A*B-A*C))/((1-B)*B))')),
            ('-2', ('(((1-A)*B)/((A+B-A*B-A*C)))', '((C*(A+B-A*B-A*C))/((1-B)*B))')),
            ('-1', ('-(((1-A)*B)/(A-B))', '(((A-B)*C)/(B*(1-C)))')),
            ('2', ('((A*(1-B))/(A-B))', '(((A-B)*C)/(B*(1-C)))')),
            ('-1', ('-(((1-A)*B)/(A-B))', '-((A-B)/(B-A*C))')),
            ('1', ('-((1-B)/(B-C))', '((A*(B-C))/(B-A*C))')),
            ('2', ('((A*(1-B))/(A-B))', '-((A-B)/(B-A*C))')),
            ('4', ('-((B-C)/(1-B))', '-(((1-A)*C)/(B-C))')),
            ('-1', ('((1-C)/(1-B))', '(((1-A)*B)/(B-A*C))')),
            ('1', ('((1-C)/(B-C))', '((A*(B-C))/(B-A*C))')),
            ('1', ('((B-C)/(1-C))', '-(((1-A)*C)/(B-C))')),
            ('-2', ('((1)/(1-A))', '(((1-B)*(1-C))/(1-B-C))')),
            ('2', ('((1-B)/(1-C))', '(((1-A)*B)/(B-A*C))')),
            ('-1', ('-((A-B)/(B))', '-(((1-A)*B)/(A-B))')),
            ('1', ('1', '(((1-A)*B*C)/((A-A*B-A*C+B*C)))')),
            ('-1', ('-((1-B)/(B-C))', '-((B-C)/(C))')),
            ('-2', ('((A*(1-B))/(A-B))', '-((A-B)/(B))')),
            ('-1', ('((1-C)/(B-C))', '-((B-C)/(C))')),
            ('-2', ('(((1-A)*B)/(A*(1-B)))', '((A*C)/(B))')),
            ('-1', ('1', '(((1-B)*(1-C))/(1-B-C))')),
            ('2', ('-((A-B)/((1-A)*B))', '1-C')),
            ('-1', ('1', '(((1-A)*B)/((A+B-A*B-A*C)))')),
            ('2', ('1-A', '((1-B-C)/(1-C))')),
            ('-1', ('((1-C)/(1-B))', '((A*C)/(B))')),
            ('-2', ('((1-B)/(1-C))', '((A*C)/(B))')),
            ('-1', ('A', '(((1-C)*C)/((1-B)*B))')),
            ('-2', ('A', '(((1-B)*C)/(B*(1-C)))')),
            ('-3', ('((1-B)/(1-C))', '((B)/(C))')),
            ('1', ('1', '((1-C)/(1-B-C))')),
            ('1', ('((1)/(A))', '-((B*C)/(1-B-C))')),
            ('-1', ('((A*(1-B))/(A-B))', '((1)/(C))')),
            ('1', ('1', '(((1-A)*B)/(B-A*C))')),
            ('-1', ('1', '((A*(1-B))/(A-B))')),
            ('-1', ('1', '-((B*C)/(1-B-C))')),
            ('1', ('1-A', '-((C)/(1-C))')),
            ('-3', ('1-A', '-((C)/(B-C))')),
            ('1', ('1', '-((B)/(1-B-C))')),
            ('-1', ('A', '-((1-B-C)/(B))')),
            ('-2', ('1', '((1-B)/(1-C))')),
            ('2', ('((1)/(1-A))', '1-B')),
            ('2', ('A', '-((1-B)/(B))')),
            ('1', ('A', '((1-C)/(B))')),
            ('3', ('((A)/(B))', '1-C')),
            ('-1', ('((1)/(1-B))', 'C')),
            ('-3', ('((1)/(B))', '1-C')),
            ('-1', ('1', '1-A')),
            ('1', ('1', '1-B')),
            ('1', ('1', '1-C')),
            ('-2', ('A', '((C)/(B))')),
            ('2', ('((A)/(B))', 'C')),
            ('1', ('((1)/(A))', 'B')),
            ('1', ('1', 'A')),
        )),
        (5, (1,), (
            ('7', ('(((1-B)*(1-C))/((1-A)*(1-B-C)))',)),
            ('3', ('(((1-A)*B*(1-C))/((1-B)*(B-A*C)))',)),
            ('-7', ('(((1-A)*(1-B)*B)/((1-C)*(B-A*C)))',)),
            ('-4', ('(((1-A)*B*C)/((A-A*B-A*C+B*C)))',)),
            ('5', ('(((1-B)*B)/(C*(A+B-A*B-A*C)))',)),
            ('-5', ('(((1-B)*B)/((A-A*B-A*C+B*C)))',)),
            ('7', ('-(((1-A)*B)/((A-B)*(1-C)))',)),
            ('2', ('(((1-B)*(1-C))/(1-B-C))',)),
            ('-3', ('(((1-A)*(1-B-C))/(1-C))',)),
            ('4', ('(((1-A)*B)/((A+B-A*B-A*C)))',)),
            ('2', ('-((A*(1-B-C))/(B*C))',)),
            ('3', ('((A*(1-B))/((A-B)*C))',)),
            ('3', ('((B*(1-C))/((A-B)*C))',)),
            ('9', ('(((1-B)*B)/((1-C)*C))',)),
            ('-4', ('((1-C)/(1-B-C))',)),
            ('-8', ('-((A*(1-B))/(B-A*C))',)),
            ('1', ('((A*(B-C))/(B-A*C))',)),
            ('-3', ('-((A-B)/(B-A*C))',)),
            ('-3', ('((A*(1-C))/(B-A*C))',)),
            ('4', ('(((1-A)*B)/(B-A*C))',)),
            ('5', ('-(((1-A)*C)/(B-C))',)),
            ('2', ('((A*(1-B))/(A-B))',)),
            ('2', ('-((B*C)/(1-B-C))',)),
            ('3', ('-((A*(1-B-C))/(B))',)),
            ('5', ('-((1-B)/(B-C))',)),
            ('-10', ('(((1-A)*C)/(1-B))',)),
            ('-1', ('-((B)/(1-B-C))',)),
            ('1', ('((1-C)/(B-C))',)),
            ('5', ('((1-B)/(1-C))',)),
            ('7', ('((1-A)/(1-B))',)),
            ('2', ('-((1-C)/(C))',)),
            ('2', ('-((B-C)/(C))',)),
            ('3', ('-((A-B)/(B))',)),
            ('-5', ('((A*(1-C))/(B))',)),
            ('5', ('((1-B)/(C))',)),
            ('-9', ('((B)/(1-C))',)),
            ('3', ('((A*C)/(B))',)),
            ('-2', ('1-C',)),
            ('3', ('1-A',)),
            ('3', ('((A)/(B))',)),
            ('-3', ('((B)/(C))',)),
            ('-4', ('1-B',)),
            ('-1', ('A',)),
            ('1', ('B',)),
            ('4', ('C',)),
        )),
    ),
    'fullsym2': (
        (3, (1, 1, 1), (
            ('1', ('A', 'B', 'C')),
            ('1', ('A', '((B)/(B-1))', '((1)/(1-C))')),
        )),
        (3, (1, 1, 1), (
            ('-1/2', ('1', '(((1-C+B*C^2-A*B*C^2-B^2*C^2+A*B^2*C^2))/((1-A)*(1-B)*B*C^2))', '((A*B*(1-C)*C)/((1-C+B*C^2-A*B*C^2-B^2*C^2+A*B^2*C^2)))')),
            ('1/2', ('1', '((1-C)/((1-C+B*C^2-A*B*C^2-B^2*C^2+A*B^2*C^2)))', '(((1-C+B*C^2-A*B*C^2-B^2*C^2+A*B^2*C^2))/(A*B*(1-C)*C))')),
            ('1/2', ('1', '-((1-B*C+A*B*C)/((1-A)*B*C))', '-((A*B*(1-C))/((1-B)*(1-B*C+A*B*C)))')),
            ('1/2', ('1', '(((1-A*B-C+B*C))/((1-B)*(1-C)))', '-((A*B*(1-C))/((1-A*B-C+B*C)))')),
            ('1/2', ('1', '(((1-C+B*C-A*B*C))/(1-C))', '-((1-B)/(A*B*(1-C+B*C-A*B*C)))')),
            ('-1/2', ('1', '(((1-A)*B)/((1-A*B-C+B*C)))', '-(((1-A*B-C+B*C))/(A*B*(1-C)))')),
            ('1', ('1', '(((1-C+B*C-A*B*C))/(1-C))', '-((A*B)/((1-B)*(1-C+B*C-A*B*C)))')),
            ('1/2', ('1', '(((1-A)*B*C)/((1-C+B*C-A*B*C)))', '(((1-C+B*C-A*B*C))/(1-A*B*C))')),
            ('1/2', ('1', '-((1-C+B*C)/((1-B)*C))', '-((A*(1-C))/((1-A)*(1-C+B*C)))')),
            ('-1/2', ('1', '((1)/(1-B*C+A*B*C))', '-(((1-B)*(1-B*C+A*B*C))/(A*B*(1-C)))')),
            ('-1', ('1', '(((1-C+B*C-A*B*C))/(1-C))', '-((A*B*C)/((1-C+B*C-A*B*C)))')),
            ('1/2', ('((1)/(1-C+B*C))', '1', '(((1-C+B*C-A*B*C))/((1-A)*B*C))')),
            ('1/2', ('1', '(((1-A)*B)/(1-A*B))', '-((1-A*B)/(A*B*(1-C)))')),
            ('1/2', ('1', '((1-C)/(1-C+B*C))', '-((1-C+B*C)/((1-B)*C))')),
            ('-3/4', ('1', '(((1-A)*B*C)/((1-C+B*C-A*B*C)))', '(1-C+B*C-A*B*C)')),
            ('-3/4', ('1', '(((1-C+B*C-A*B*C))/(1-C))', '((1)/((1-C+B*C-A*B*C)))')),
            ('-1/2', ('1', '((1-B)/(1-A*B))', '-((1-A*B)/(A*B*(1-C)))')),
            ('1/2', ('1', '((1)/(1-C+B*C))', '-(((1-A)*(1-C+B*C))/(A*(1-C)))')),
            ('-1/2', ('1', '-((1-C+B*C)/((1-B)*C))', '((A*B*C)/(1-C+B*C))')),
            ('-1/2', ('((1-C)/((1-B*C)*(1-C+B*C)))', '1', '-((A)/(1-A))')),
            ('-1/2', ('1', '((1-B*C)/(1-C))', '-((1-A)/(A*(1-B*C)))')),
            ('-1/2', ('1', '(((1-A*B)*C)/(1-A*B*C))', '(((1-A)*B)/(1-A*B))')),
            ('1/2', ('-((1-B)/((1-A)*B))', '1', '((1-A*B*C)/(1-C))')),
            ('-1/2', ('1', '(((1-B)*C)/(1-B*C))', '((1-B*C)/(1-A*B*C))')),
            ('1/2', ('1', '(((1-A*B)*C)/(1-A*B*C))', '((1-B)/(1-A*B))')),
            ('-1/2', ('((1)/(1-C+B*C))', '1', '(((1-C+B*C-A*B*C))/(1-C))')),
            ('-1/2', ('-(((1-A)*B)/(1-B))', '1', '((1-A*B*C)/(1-C))')),
            ('1/2', ('1', '-((1-A*B)/(A*B))', '(((1-A)*B)/(1-A*B))')),
            ('-1/2', ('1', '-((1-A*B)/(A*B))', '((1-B)/(1-A*B))')),
            ('-1/2', ('1', '((1)/(1-C+B*C))', '((1-C+B*C)/(A*B*C))')),
            ('-1/2', ('1', '-((1-C)/(C))', '-((A)/((1-A)*(1-B)))')),
            ('1/2', ('1', '((1-C+B*C)/(1-C))', '((1)/(1-C+B*C))')),
            ('1/2', ('((1)/(1-C+B*C))', '1', '((1-C+B*C)/(1-C))')),
            ('-1/2', ('((1)/(1-C+B*C))', '1', '((1-C+B*C)/(B*C))')),
            ('1/2', ('1', '((1)/(A))', '-((1-B)/(B*(1-C)))')),
            ('-1/2', ('-((1-B)/((1-A)*B))', '1', 'A*B')),
            ('1/2', ('-(((1-A)*B)/(1-B))', '1', 'A*B')),
            ('1/2', ('((1)/(1-B*C))', '1', '-((A)/(1-A))')),
            ('-1', ('1', 'A', '-((B)/((1-B)*(1-C)))')),
            ('1', ('1', '1-C', '-((1-B)/(A*B))')),
            ('-5/2', ('((1)/(1-C))', '1', '-((1-B)/(B))')),
            ('1/2', ('((B)/(1-C+B*C))', '1', 'A')),
            ('7/4', ('((1)/(1-B+A*B))', '1', '((1)/(C))')),
            ('1', ('1', 'A', '-((B*C)/(1-C))')),
            ('-1/2', ('1', '((1)/(A))', '((1)/(B*C))')),
            ('3/4', ('1', 'C', '(1-A)*B')),
            ('7/4', ('C', '1', 'B')),
        )),
        (3, (1, 2), (
            ('-1/2', ('((A*B*(1-C)*C)/((1-C+B*C^2-A*B*C^2-B^2*C^2+A*B^2*C^2)))', '(((1-C+B*C^2-A*B*C^2-B^2*C^2+A*B^2*C^2))/(1-C))')),
            ('1/2', ('-((A*B*(1-C))/((1-A*B-C+B*C)))', '(((1-A*B-C+B*C))/((1-A)*B))')),
            ('-1/2', ('(((1-A)*B*C)/((1-C+B*C-A*B*C)))', '(((1-C+B*C-A*B*C))/(1-A*B*C))')),
            ('1/2', ('-((A*B*(1-C))/((1-B)*(1-B*C+A*B*C)))', '1-B*C+A*B*C')),
            ('3/4', ('(((1-A)*B*C)/((1-C+B*C-A*B*C)))', '(1-C+B*C-A*B*C)')),
            ('-1/2', ('((1-A*B)/((1-A)*B))', '-((A*B*(1-C))/(1-A*B))')),
            ('-1/2', ('-(((1-B)*C)/(1-C+B*C))', '((1-C+B*C)/(1-C))')),
            ('-1/2', ('-((A*(1-C))/((1-A)*(1-C+B*C)))', '1-C+B*C')),
            ('1/2', ('((1-A*B)/(1-B))', '-((A*B*(1-C))/(1-A*B))')),
            ('1/2', ('(((1-B)*C)/(1-B*C))', '((1-B*C)/(1-A*B*C))')),
            ('-1/2', ('-((1-B)/(A*B))', '-(((1-A)*B*C)/(1-C))')),
            ('-1/2', ('-((1-A)/(A))', '-(((1-B)*C)/(1-C))')),
            ('1/2', ('-(((1-A)*(1-B))/(A))', '-((C)/(1-C))')),
            ('1/2', ('-((1-C)/((1-A)*B*C))', 'A*B*C')),
            ('1/2', ('((A*B*C)/(1-C+B*C))', '1-C+B*C')),
            ('-1/2', ('-((1-C)/((1-B)*C))', 'A*B*C')),
            ('1/2', ('1', '(((1-A)*B*C)/(1-A*B*C))')),
            ('-1/2', ('1', '-((A*B*(1-C))/(1-B))')),
            ('-1/2', ('1', '(((1-B)*C)/(1-A*B*C))')),
            ('1/2', ('1', '-(((1-B)*C)/(1-C))')),
            ('-1/2', ('-((A*B)/(1-B))', '1-C')),
            ('1/2', ('-((A)/(1-A))', '1-C')),
            ('1', ('1', '-((A*B*C)/(1-C))')),
            ('-1', ('A', '-((B*C)/(1-C))')),
            ('-3/4', ('1', '(1-A)*B*C')),
            ('-1', ('A', 'B*C')),
            ('1', ('A*B', 'C')),
        )),
        (4, (1, 1), (
            ('-1', ('((A*B*(1-C)*C)/((1-C+B*C^2-A*B*C^2-B^2*C^2+A*B^2*C^2)))', '(((1-C+B*C^2-A*B*C^2-B^2*C^2+A*B^2*C^2))/((1-A)*(1-B)*B*C^2))')),
            ('-3/2', ('((A*B*(1-C)*C)/((1-C+B*C^2-A*B*C^2-B^2*C^2+A*B^2*C^2)))', '(((1-C+B*C^2-A*B*C^2-B^2*C^2+A*B^2*C^2))/(1-C))')),
            ('1/2', ('1', '(((1-A)*(1-B)*B*C^2)/((1-C+B*C^2-A*B*C^2-B^2*C^2+A*B^2*C^2)))')),
            ('-1', ('-(((1-A)*B*C)/(1-B*C+A*B*C))', '-(((1-B)*(1-B*C+A*B*C))/(A*B*(1-C)))')),
            ('1', ('-((A*B*(1-C))/((1-A*B-C+B*C)))', '(((1-A*B-C+B*C))/((1-B)*(1-C)))')),
            ('-1', ('(((1-A)*B*C)/((1-C+B*C-A*B*C)))', '-(((1-B)*(1-C+B*C-A*B*C))/(A*B))')),
            ('-1/2', ('(((1-A)*B*C)/((1-C+B*C-A*B*C)))', '-((A*B*(1-C+B*C-A*B*C))/(1-B))')),
            ('1', ('-((A*B)/((1-B)*(1-C+B*C-A*B*C)))', '(((1-C+B*C-A*B*C))/(1-C))')),
            ('1', ('(((1-A)*B*C)/((1-C+B*C-A*B*C)))', '-(((1-C+B*C-A*B*C))/(A*B*C))')),
            ('-1', ('(((1-A)*B*C)/((1-C+B*C-A*B*C)))', '(((1-C+B*C-A*B*C))/(1-A*B*C))')),
            ('3/2', ('-((A*B*(1-C))/((1-A*B-C+B*C)))', '(((1-A*B-C+B*C))/((1-A)*B))')),
            ('-1/2', ('((1-C)/((1-C+B*C-A*B*C)))', '-((A*B*(1-C+B*C-A*B*C))/(1-B))')),
            ('1/2', ('((1-C)/((1-C+B*C-A*B*C)))', '(((1-C+B*C-A*B*C))/(1-A*B*C))')),
            ('-1/2', ('-((1-C+B*C)/((1-B)*C))', '(((1-A)*B*C)/((1-C+B*C-A*B*C)))')),
            ('-1', ('-((A*B*C)/((1-C+B*C-A*B*C)))', '(((1-C+B*C-A*B*C))/(1-C))')),
            ('1/2', ('-(((1-B)*C)/(1-C+B*C))', '(((1-C+B*C-A*B*C))/(1-C))')),
            ('3/2', ('-((A*B*(1-C))/((1-B)*(1-B*C+A*B*C)))', '1-B*C+A*B*C')),
            ('9/4', ('(((1-A)*B*C)/((1-C+B*C-A*B*C)))', '(1-C+B*C-A*B*C)')),
            ('-3/2', ('((1-A*B)/((1-A)*B))', '-((A*B*(1-C))/(1-A*B))')),
            ('-3/2', ('-(((1-B)*C)/(1-C+B*C))', '((1-C+B*C)/(1-C))')),
            ('-1/2', ('-((A*(1-C))/((1-A)*(1-C+B*C)))', '1-C+B*C')),
            ('-1', ('-((1-A)/(A))', '(((1-B*C)*(1-C+B*C))/(1-C))')),
            ('-1/2', ('-((A)/(1-A))', '(((1-B)*(1-C))/(1-C+B*C))')),
            ('1/2', ('(((1-B)*C)/(1-B*C))', '-((A*(1-B*C))/(1-A))')),
            ('1', ('(((1-B)*C)/(1-B*C))', '((1-B*C)/(1-A*B*C))')),
            ('-1', ('1-C+B*C', '(((1-A)*B*C)/((1-C+B*C-A*B*C)))')),
            ('3/2', ('((1-A*B)/(1-B))', '-((A*B*(1-C))/(1-A*B))')),
            ('1/2', ('((1-C)/(1-B*C))', '-((A*(1-B*C))/(1-A))')),
            ('-1/2', ('((1-C)/(1-B*C))', '((1-B*C)/(1-A*B*C))')),
            ('-3/2', ('-(((1-A)*B)/(1-B))', '((1-C)/(1-A*B*C))')),
            ('3/2', ('-(((1-A)*B)/(1-B))', '((1-A*B*C)/(1-C))')),
            ('-1/2', ('1', '(((1-B)*B*C^2)/((1-B*C)*(1-C+B*C)))')),
            ('1/2', ('A', '(((1-B)*B*C^2)/((1-B*C)*(1-C+B*C)))')),
            ('-1', ('-((1-B)/(A*B))', '-(((1-A)*B*C)/(1-C))')),
            ('1', ('1-C+B*C', '((1-C)/((1-C+B*C-A*B*C)))')),
            ('-1/2', ('1', '(((1-B)*(1-C))/((1-A*B-C+B*C)))')),
            ('7/4', ('-(((1-A)*B)/(1-B+A*B))', '((1)/(1-C))')),
            ('1/2', ('1', '(((1-A)*B*C)/((1-C+B*C-A*B*C)))')),
            ('1/2', ('((1-C)/(1-C+B*C))', '1-C+B*C')),
            ('1', ('-((1-C)/((1-A)*B*C))', 'A*B*C')),
            ('-1/2', ('1', '(((1-B*C)*(1-C+B*C))/(1-C))')),
            ('-1/4', ('1', '((1-C)/((1-C+B*C-A*B*C)))')),
            ('1/2', ('1', '(((1-B)*(1-C))/(1-C+B*C))')),
            ('-1/2', ('1', '-(((1-A)*B*C)/(1-B*C+A*B*C))')),
            ('1/2', ('((A*B*C)/(1-C+B*C))', '1-C+B*C')),
            ('-1/2', ('-((1-B)/((1-A)*B))', 'A*B*C')),
            ('-1', ('-((1-C)/((1-B)*C))', 'A*B*C')),
            ('-3/2', ('((B*C)/(1-C+B*C))', '1-C+B*C')),
            ('3/2', ('-((1-B)/((1-A)*B))', 'A*B')),
            ('1/2', ('-(((1-A)*B)/(1-B))', 'A*B*C')),
            ('-1/2', ('-(((1-A)*A*B^2)/(1-B))', 'C')),
            ('7/4', ('1', '-(((1-A)*B)/(1-B+A*B))')),
            ('1', ('((1)/(A))', '-(((1-B)*(1-C))/(B))')),
            ('3/2', ('A*B', '-(((1-A)*B)/(1-B))')),
            ('2', ('-((1-B)/(A*B))', '1-C')),
            ('1', ('-((1-A)/(A))', '(1-B)*C')),
            ('1/2', ('A', '-((B*(1-C))/(1-B))')),
            ('1/2', ('-((A*(1-B))/(1-A))', 'C')),
            ('1', ('-((1-A)/(A))', '1-B*C')),
            ('-1', ('-(((1-A)*(1-B))/(A))', 'C')),
            ('-2', ('-((A*B)/(1-B))', '1-C')),
            ('1/2', ('1', '((1-C)/(1-B*C))')),
            ('-1', ('-((1-A)/(A))', '1-B')),
            ('1', ('-((A)/(1-A))', '1-C')),
            ('-1', ('-((1-B)/(B))', '1-C')),
            ('21/4', ('1-B', '-((C)/(1-C))')),
            ('-27/4', ('-((B)/(1-B))', '1-C')),
            ('-1/2', ('1', '((B*C)/(1-C+B*C))')),
            ('1/2', ('1', '-((B*C)/(1-B*C))')),
            ('1/2', ('1', '((B)/(1-C+B*C))')),
            ('-1/2', ('A', '-((B*C)/(1-B*C))')),
            ('1', ('A', '((B)/(1-C+B*C))')),
            ('-1', ('A', '-((B*C)/(1-C))')),
            ('-3/2', ('1', '-((1-A)/(A))')),
            ('-27/4', ('1', '-((1-B)/(B))')),
            ('7/4', ('1', '1-B+A*B')),
            ('-7/2', ('1-B+A*B', 'C')),
            ('11/4', ('(1-A)*B', 'C')),
            ('1/2', ('1', '1-B*C')),
            ('1', ('1-A', 'B')),
            ('1', ('1-B', 'C')),
            ('-3/2', ('1', '1-B')),
            ('-1/2', ('A', 'B*C')),
            ('4', ('A*B', 'C')),
            ('7/2', ('1', 'C')),
            ('-5', ('1', 'B')),
        )),
        (5, (1,), (
            ('-1', ('(((1-A)*(1-B)*B*C^2)/((1-C+B*C^2-A*B*C^2-B^2*C^2+A*B^2*C^2)))',)),
            ('1/2', ('((A*B*(1-C)*C)/((1-C+B*C^2-A*B*C^2-B^2*C^2+A*B^2*C^2)))',)),
            ('-1', ('((1-C)/((1-C+B*C^2-A*B*C^2-B^2*C^2+A*B^2*C^2)))',)),
            ('1', ('-(((1-A)*B*(1-C+B*C))/((1-B)*(1-C+B*C-A*B*C)))',)),
            ('-3/2', ('-(((1-B)*C*(1-C+B*C-A*B*C))/((1-C)*(1-C+B*C)))',)),
            ('3/2', ('-(((1-A)*(1-B*C)*(1-C+B*C))/(A*(1-C)))',)),
            ('7/2', ('(((1-A)*B*C*(1-C+B*C))/((1-C+B*C-A*B*C)))',)),
            ('1', ('-((A*(1-B)*(1-C))/((1-A)*(1-C+B*C)))',)),
            ('-1', ('((A*(1-B)*B*C^2)/((1-B*C)*(1-C+B*C)))',)),
            ('-5/2', ('-(((1-A)*B*(1-A*B*C))/((1-B)*(1-C)))',)),
            ('-7/2', ('(((1-C)*(1-C+B*C))/((1-C+B*C-A*B*C)))',)),
            ('5', ('-(((1-A)*B*(1-C))/((1-B)*(1-A*B*C)))',)),
            ('1/2', ('-((A*B*(1-C))/((1-B)*(1-B*C+A*B*C)))',)),
            ('1', ('(((1-B)*B*C^2)/((1-B*C)*(1-C+B*C)))',)),
            ('1', ('-((A*B)/((1-B)*(1-C+B*C-A*B*C)))',)),
            ('1/2', ('-((A*(1-C))/((1-A)*(1-C+B*C)))',)),
            ('1', ('(((1-B)*(1-C))/((1-A*B-C+B*C)))',)),
            ('-21/4', ('-(((1-A)*B)/((1-B+A*B)*(1-C)))',)),
            ('-1', ('-((A*B*(1-C+B*C-A*B*C))/(1-B))',)),
            ('-1/2', ('-((A*B*(1-C))/((1-A*B-C+B*C)))',)),
            ('-3/2', ('((1-A*B*C)/((1-C+B*C-A*B*C)))',)),
            ('-2', ('(((1-A)*B*C)/((1-C+B*C-A*B*C)))',)),
            ('1/2', ('((1-C)/((1-C+B*C-A*B*C)))',)),
            ('-1', ('(((1-B)*(1-C))/(1-C+B*C))',)),
            ('1', ('(((1-A)*B)/((1-A*B-C+B*C)))',)),
            ('2', ('-(((1-A)*B*C)/(1-B*C+A*B*C))',)),
            ('-1', ('-((A*B*C)/((1-C+B*C-A*B*C)))',)),
            ('5/2', ('-(((1-A)*A*B^2*C)/(1-B))',)),
            ('-7/2', ('-(((1-A)*B)/(1-B+A*B))',)),
            ('-9/2', ('-(((1-A)*A*B^2)/(1-B))',)),
            ('10', ('-((A*B)/((1-B)*(1-C)))',)),
            ('5/2', ('(((1-A)*B*C)/(1-A*B*C))',)),
            ('1', ('-((A*(1-B*C))/(1-A))',)),
            ('-1', ('((1-C)/(1-C+B*C))',)),
            ('-3/2', ('-(((1-A)*(1-B*C))/(A))',)),
            ('-3/2', ('((1-B*C)/(1-A*B*C))',)),
            ('-5/2', ('-((A*B*(1-C))/(1-B))',)),
            ('-5/2', ('-((A*(1-B)*C)/(1-A))',)),
            ('-5/2', ('-(((1-A)*B*C)/(1-C))',)),
            ('-5/2', ('(((1-B)*C)/(1-A*B*C))',)),
            ('5', ('-(((1-A)*(1-B)*C)/(A))',)),
            ('1/2', ('-(((1-A)*B)/(1-B))',)),
            ('-3/2', ('((1-C)/(1-A*B*C))',)),
            ('-2', ('(((1-A)*B)/(1-A*B))',)),
            ('5/2', ('-(((1-A)*(1-B))/(A))',)),
            ('-3', ('-((A*(1-B))/(1-A))',)),
            ('4', ('-(((1-B)*(1-C))/(B))',)),
            ('-5', ('-((A*(1-C))/(1-A))',)),
            ('-35/4', ('-(((1-B)*C)/(1-C))',)),
            ('23/2', ('-((B*(1-C))/(1-B))',)),
            ('-1/2', ('((A*B*C)/(1-C+B*C))',)),
            ('2', ('((1-B)/(1-A*B))',)),
            ('-2', ('((1-C)/(1-B*C))',)),
            ('-3/4', ('(1-C+B*C-A*B*C)',)),
            ('1', ('-((A*B*C)/(1-B*C))',)),
            ('2', ('((B*C)/(1-C+B*C))',)),
            ('-7/2', ('((A*B)/(1-C+B*C))',)),
            ('-1', ('-((B*C)/(1-B*C))',)),
            ('-1', ('((B)/(1-C+B*C))',)),
            ('-3', ('-((A*B)/(1-B))',)),
            ('7/2', ('-((B*C)/(1-C))',)),
            ('-1/4', ('-((1-C)/(C))',)),
            ('-1', ('1-B*C+A*B*C',)),
            ('-7/2', ('-((1-A)/(A))',)),
            ('31/4', ('-((1-B)/(B))',)),
            ('49/4', ('(1-B+A*B)*C',)),
            ('-1', ('1-C+B*C',)),
            ('-16', ('(1-A)*B*C',)),
            ('-2', ('(1-B)*C',)),
            ('-7/2', ('(1-A)*B',)),
            ('-27/4', ('1-C',)),
            ('-5/2', ('A*B*C',)),
            ('-1/4', ('B*C',)),
            ('1', ('A',)),
            ('-41/4', ('C',)),
            ('27/2', ('B',)),
        )),
    ),
}
