"""Engine constants."""

# Versions of the on-disk formats
FORMAT_VERSIONS = {
    'MODULE': 1,
    'CHART': 1,
}

ENGINE_VERSION = '1.0.0'

# Exit statuses for the command-line surface
EXIT_CODES = {
    'OK': 0,
    'VERIFICATION_FAILED': 1,
    'USAGE': 2,
}

# Bidegree of the critical obstruction group
CRITICAL_BIDEGREE = {
    'X': -2,
    'S': 3,
}

# Named classes over a degree-2 generator, as (name, expression text)
NAMED_CLASSES = {
    'y5': 'Q3(x)',
    'y7': 'Q5(x)',
    'y9': 'Q7(x)',
    'y13': 'Q11(x)',
    'y8': 'Q6(x) + x^4',
    'y10': 'Q8(x) + x^2*Q4(x)',
    'y12': 'Q10(x) + Q4(x)^2',
}

# The ten summands of the degree-30 relation on a degree-2 class
BIG_RELATION_TERMS = [
    'Q20(y10)',
    'Q18(y12)',
    'Q17(y13)',
    'x^4*Q12(y10)',
    'y9^2*Q4(x)^2',
    'y7^2*Q9(Q5(x))',
    'y8^2*Q8(Q4(x))',
    'Q9(y9)*Q4(x)^2',
    'Q10(y8)*Q4(x)^2',
    'y5^2*(Q11(Q7(x)) + Q10(Q8(x)) + x^4*Q6(Q4(x)))',
]

BIG_RELATION_DEGREE = 30

# Chart labels known to be misprinted in published charts
LABEL_CORRECTIONS = {
    'R24 R11 y1': 'R23 R11 y1',
}

# SVG rendering
CHART_STYLE = {
    'CELL_SIZE': 40,
    'MARGIN': 30,
    'DOT_RADIUS': 3,
    'DOT_SPACING': 7,
    'FONT_SIZE': 9,
}

# Colours for v_i structure lines, cycled by index
LINE_COLOURS = ['#000000', '#1f77b4', '#d62728', '#2ca02c', '#9467bd', '#8c564b']

# Built-in presentation names accepted by --module
PRESETS = {
    'BP': 'bp',
}
