//! Literal entry tables for the transcribed operators.
//!
//! Orientation: every table is written row by row, and entry `(i, j)` is the
//! coefficient of basis element `i` in the image of basis element `j`. Column
//! `j` is therefore the image of the `j`-th basis element. The basis order is
//! `T1, Tm1, Tp, Tm, TB, S2, Sm2, S2Sm2`.
//!
//! Scalar prefixes are kept out of the tables: the Jordan tube carries an
//! overall factor `q^3 - q`, the unreduced genus tube `(q^3 - q)^2`.

pub(crate) type Table = [[&'static str; 8]; 8];

/// Images of the basis under `eta`, the push-pull along the trace map.
pub(crate) const ETA: Table = [
    ["1", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "1", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "q^2 - 1", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "q^2 - 1", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "q^2", "0", "0", "q"],
    ["0", "0", "0", "0", "0", "q^2", "q", "0"],
    ["0", "0", "0", "0", "0", "q", "q^2", "0"],
    ["0", "0", "0", "0", "q", "0", "0", "q^2"],
];

/// Reduced tube with one Jordan puncture of trace 2, divided by `q^3 - q`.
pub(crate) const JORDAN_PLUS: Table = [
    ["0", "0", "1", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "1", "0", "0", "0", "0"],
    ["q^2 - 1", "0", "q - 2", "q", "q^2 - 2q + 1", "-q + 1", "-q + 1", "-2q + 2"],
    ["0", "q^2 - 1", "q", "q - 2", "q^2 - 2q + 1", "-q + 1", "-q + 1", "-2q + 2"],
    ["0", "0", "q", "q", "q^2 - 2q", "-q + 1", "-q + 1", "-q + 2"],
    ["0", "0", "0", "0", "0", "-1", "q", "0"],
    ["0", "0", "0", "0", "0", "q", "-1", "0"],
    ["0", "0", "0", "0", "q", "0", "0", "-1"],
];

/// Reduced tube with one Jordan puncture of trace -2, divided by `q^3 - q`.
/// Only used to cross-check the relation with `sigma`; the operator set
/// derives this tube from `JORDAN_PLUS`.
pub(crate) const JORDAN_MINUS: Table = [
    ["0", "0", "0", "1", "0", "0", "0", "0"],
    ["0", "0", "1", "0", "0", "0", "0", "0"],
    ["0", "q^2 - 1", "q", "q - 2", "q^2 - 2q + 1", "-q + 1", "-q + 1", "-2q + 2"],
    ["q^2 - 1", "0", "q - 2", "q", "q^2 - 2q + 1", "-q + 1", "-q + 1", "-2q + 2"],
    ["0", "0", "q", "q", "q^2 - 2q", "-q + 1", "-q + 1", "-q + 2"],
    ["0", "0", "0", "0", "0", "q", "-1", "0"],
    ["0", "0", "0", "0", "0", "-1", "q", "0"],
    ["0", "0", "0", "0", "q", "0", "0", "-1"],
];

/// Unreduced genus tube, divided by `(q^3 - q)^2`.
pub(crate) const GENUS_UNREDUCED: Table = [
    [
        "q + 4",
        "1",
        "q^2 - 2q - 3",
        "q^2 + 3q",
        "q^3 - 2q^2 - 3q - 2",
        "-q^2 - 4q - 1",
        "2q^2 - 7q - 1",
        "-5q - 1",
    ],
    [
        "1",
        "q + 4",
        "q^2 + 3q",
        "q^2 - 2q - 3",
        "q^3 - 2q^2 - 3q - 2",
        "2q^2 - 7q - 1",
        "-q^2 - 4q - 1",
        "-5q - 1",
    ],
    [
        "q^2 - 2q - 3",
        "q^2 + 3q",
        "q^4 + q^3 + 3q + 3",
        "q^4 - 3q^2 - 6q",
        "q^5 - 2q^4 - 3q^3 + q^2 + 3q",
        "-q^4 + 2q^3 - 4q^2 + 3q",
        "-q^4 - q^3 - 4q^2 + 6q",
        "-2q^3 - q^2 + 3q",
    ],
    [
        "q^2 + 3q",
        "q^2 - 2q - 3",
        "q^4 - 3q^2 - 6q",
        "q^4 + q^3 + 3q + 3",
        "q^5 - 2q^4 - 3q^3 + q^2 + 3q",
        "-q^4 - q^3 - 4q^2 + 6q",
        // the lone trailing `q` belongs to this entry
        "-q^4 + 2q^3 - 4q^2 + 3q",
        "-2q^3 - q^2 + 3q",
    ],
    [
        "q^2 + 1",
        "q^2 + 1",
        "q^4 - 2q^2",
        "q^4 - 2q^2",
        "q^5 - 2q^4 - q^3 + 2q^2 - 2",
        "-q^4 - q^3 + q^2 - q - 1",
        "-q^4 - q^3 + q^2 - q - 1",
        "-2q^3 + q^2 - 2q - 1",
    ],
    ["0", "3q", "3q^2", "-3q", "-3q^2", "4q^3 - 6q^2", "-4q^2", "-3q^2"],
    ["3q", "0", "-3q", "3q^2", "-3q^2", "-4q^2", "4q^3 - 6q^2", "-3q^2"],
    [
        "q",
        "q",
        "q^3",
        "q^3",
        "q^4 - 2q^3 - q^2 - 2q",
        "-q^3 - q^2 - q",
        "-q^3 - q^2 - q",
        "q^3 - 2q^2 - q",
    ],
];
