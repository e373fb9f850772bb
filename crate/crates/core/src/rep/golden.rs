//! Printed data used as golden values: the 72 root-vector operators on V,
//! the two weight tables, the expansions of ζ_1..ζ_15 and the expanded
//! cubic invariant. Formula strings are kept in their original LaTeX.

/// Root (E6 simple-root coefficients) and printed right-hand side of E_α|_V.
pub const PRINTED_OPERATORS: [([i32; 6], &str); 72] = [
    (
        [1, 0, 0, 0, 0, 0],
        r"-x_1\partial_{x_2}+x_{11}\partial_{x_{14}}+x_{15}\partial_{x_{17}} +x_{16}\partial_{x_{19}}+x_{18}\partial_{x_{21}}+x_{20}\partial_{x_{23}}",
    ),
    (
        [0, 1, 0, 0, 0, 0],
        r"-x_4\partial_{x_6}-x_5\partial_{x_7}-x_8\partial_{x_{10}} +x_{18}\partial_{x_{20}}+x_{21}\partial_{x_{23}}+x_{22}\partial_{x_{24}}",
    ),
    (
        [0, 0, 1, 0, 0, 0],
        r"-x_2\partial_{x_3}+x_9\partial_{x_{11}} +x_{12}\partial_{x_{15}}+x_{13}\partial_{x_{16}}+x_{21}\partial_{x_{22}}+x_{23}\partial_{x_{24}}",
    ),
    (
        [0, 0, 0, 1, 0, 0],
        r"-x_3\partial_{x_4}-x_7\partial_{x_9}-x_{10}\partial_{x_{12}} -x_{16}\partial_{x_{18}}-x_{19}\partial_{x_{21}}+x_{24}\partial_{x_{25}}",
    ),
    (
        [0, 0, 0, 0, 1, 0],
        r"-x_4\partial_{x_5}-x_6\partial_{x_7}-x_{12}\partial_{x_{13}}-x_{15}\partial_{x_{16}} -x_{17}\partial_{x_{19}}+x_{25}\partial_{x_{26}}",
    ),
    (
        [0, 0, 0, 0, 0, 1],
        r"-x_5\partial_{x_8}-x_7\partial_{x_{10}}-x_9\partial_{x_{12}}-x_{11} \partial_{x_{15}} -x_{14}\partial_{x_{17}}+x_{26}\partial_{x_{27}}",
    ),
    (
        [1, 0, 1, 0, 0, 0],
        r"x_1\partial_{x_3}-x_9\partial_{x_{14}}-x_{12}\partial_{x_{17}} -x_{13}\partial_{x_{19}}+x_{18}\partial_{x_{22}}+x_{20}\partial_{x_{24}}",
    ),
    (
        [0, 1, 0, 1, 0, 0],
        r"-x_3\partial_{x_6}+x_5\partial_{x_9}+x_8\partial_{x_{12}}+x_{16}\partial_{x_{20}} +x_{19}\partial_{x_{23}}+x_{22}\partial_{x_{25}}",
    ),
    (
        [0, 0, 1, 1, 0, 0],
        r"x_2\partial_{x_4}+x_7\partial_{x_{11}}+x_{10}\partial_{x_{15}}-x_{13}\partial_{x_{18}} +x_{19}\partial_{x_{22}}+x_{23}\partial_{x_{25}}",
    ),
    (
        [0, 0, 0, 1, 1, 0],
        r"x_3\partial_{x_5}-x_6\partial_{x_9}+x_{10}\partial_{x_{13}}-x_{15}\partial_{x_{18}} -x_{17}\partial_{x_{21}}+x_{24}\partial_{x_{26}}",
    ),
    (
        [0, 0, 0, 0, 1, 1],
        r"x_4\partial_{x_8}+x_6\partial_{x_{10}}-x_9\partial_{x_{13}}-x_{11}\partial_{x_{16}}-x_{14}\partial_{x_{19}} +x_{25}\partial_{x_{27}}",
    ),
    (
        [1, 0, 1, 1, 0, 0],
        r"-x_1\partial_{x_4}-x_7\partial_{x_{14}}-x_{10}\partial_{x_{17}}+x_{13}\partial_{x_{21}}+x_{16}\partial_{x_{22}}+x_{20}\partial_{x_{25}}",
    ),
    (
        [0, 1, 1, 1, 0, 0],
        r"x_2\partial_{x_6}-x_5\partial_{x_{11}}-x_8\partial_{x_{15}}+x_{13}\partial_{x_{20}} -x_{19}\partial_{x_{x_{24}}}+x_{21}\partial_{x_{25}}",
    ),
    (
        [0, 1, 0, 1, 1, 0],
        r"x_3\partial_{x_7}+ x_4\partial_{x_9}-x_8\partial_{x_{13}}+x_{15}\partial_{x_{20}}+x_{17}\partial_{x_{23}}+x_{22}\partial_{x_{26}}",
    ),
    (
        [0, 0, 1, 1, 1, 0],
        r"-x_2\partial_{x_5}+x_6\partial_{x_{11}}-x_{10}\partial_{x_{16}}-x_{12}\partial_{x_{18}} +x_{17}\partial_{x_{22}}+x_{23}\partial_{x_{26}}",
    ),
    (
        [0, 0, 0, 1, 1, 1],
        r"-x_3\partial_{x_8}+x_6\partial_{x_{12}}+x_7\partial_{x_{13}}-x_{11}\partial_{x_{18}} -x_{14}\partial_{x_{21}} +x_{24}\partial_{x_{27}}",
    ),
    (
        [1, 1, 1, 1, 0, 0],
        r"-x_1\partial_{x_6}+x_5\partial_{x_{14}} +x_8\partial_{x_{17}}-x_{13}\partial_{x_{23}}-x_{16}\partial_{x_{24}}+x_{18}\partial_{x_{25}}",
    ),
    (
        [1, 0, 1, 1, 1, 0],
        r"x_1\partial_{x_5}-x_6\partial_{x_{14}}+x_{10}\partial_{x_{19}}+x_{12}\partial_{x_{21}}+x_{15}\partial_{x_{22}} +x_{20}\partial_{x_{26}}",
    ),
    (
        [0, 1, 1, 1, 1, 0],
        r"-x_2\partial_{x_7}-x_4\partial_{x_{11}}+x_8\partial_{x_{16}}+x_{12}\partial_{x_{20}} -x_{17}\partial_{x_{24}}+x_{21}\partial_{x_{26}}",
    ),
    (
        [0, 1, 0, 1, 1, 1],
        r"-x_3\partial_{x_{10}}-x_4\partial_{x_{12}}-x_5\partial_{x_{13}}+x_{11}\partial_{x_{20}}+x_{14}\partial_{x_{23}} +x_{22}\partial_{x_{27}}",
    ),
    (
        [0, 0, 1, 1, 1, 1],
        r"x_2\partial_{x_8}-x_6\partial_{x_{15}}-x_7\partial_{x_{16}}-x_9\partial_{x_{18}}+x_{14}\partial_{x_{22}}+x_{23}\partial_{x_{27}}",
    ),
    (
        [1, 1, 1, 1, 1, 0],
        r"x_1\partial_{x_7}+x_4\partial_{x_{14}}-x_8\partial_{x_{19}}-x_{12}\partial_{x_{23}} -x_{15}\partial_{x_{24}}+x_{18}\partial_{x_{26}}",
    ),
    (
        [1, 0, 1, 1, 1, 1],
        r"-x_1\partial_{x_8}+x_6\partial_{x_{17}}+x_7\partial_{x_{19}}+x_9\partial_{x_{21}} +x_{11}\partial_{x_{22}}+x_{20}\partial_{x_{27}}",
    ),
    (
        [0, 1, 1, 2, 1, 0],
        r"x_2\partial_{x_9}-x_3\partial_{x_{11}}-x_8\partial_{x_{18}}+x_{10}\partial_{x_{20}} -x_{17}\partial_{x_{25}}+x_{19}\partial_{x_{26}}",
    ),
    (
        [0, 1, 1, 1, 1, 1],
        r"x_2\partial_{x_{10}}+x_4\partial_{x_{15}}+x_5\partial_{x_{16}}+x_9\partial_{x_{20}}-x_{14}\partial_{x_{24}}+x_{21}\partial_{x_{27}}",
    ),
    (
        [1, 1, 1, 2, 1, 0],
        r"-x_1\partial_{x_9}+x_3\partial_{x_{14}}+x_8\partial_{x_{21}}-x_{10}\partial_{x_{23}} -x_{15}\partial_{x_{25}}+x_{16}\partial_{x_{26}}",
    ),
    (
        [1, 1, 1, 1, 1, 1],
        r"-x_1\partial_{x_{10}} -x_4\partial_{x_{17}}-x_5\partial_{x_{19}}-x_9\partial_{x_{23}}-x_{11}\partial_{x_{24}}+x_{18}\partial_{x_{27}}",
    ),
    (
        [0, 1, 1, 2, 1, 1],
        r"-x_2\partial_{x_{12}}+x_3\partial_{x_{15}} -x_5\partial_{x_{18}}+x_7\partial_{x_{20}}-x_{14}\partial_{x_{25}}+x_{19}\partial_{x_{27}}",
    ),
    (
        [1, 1, 2, 2, 1, 0],
        r"x_1\partial_{x_{11}} -x_2\partial_{x_{14}}-x_8\partial_{x_{22}}+x_{10}\partial_{x_{24}} -x_{12}\partial_{x_{25}}+x_{13}\partial_{x_{26}}",
    ),
    (
        [1, 1, 1, 2, 1, 1],
        r"x_1\partial_{x_{12}} -x_3\partial_{x_{17}}+x_5\partial_{x_{21}}-x_7\partial_{x_{23}}-x_{11}\partial_{x_{25}}+x_{16}\partial_{x_{27}}",
    ),
    (
        [0, 1, 1, 2, 2, 1],
        r"x_2\partial_{x_{13}}-x_3\partial_{x_{16}} -x_4\partial_{x_{18}}+x_6\partial_{x_{20}}-x_{14}\partial_{x_{26}}+x_{17}\partial_{x_{27}}",
    ),
    (
        [1, 1, 2, 2, 1, 1],
        r"-x_1\partial_{x_{15}} +x_2\partial_{x_{17}}-x_5\partial_{x_{22}}+x_7\partial_{x_{24}}-x_9\partial_{x_{25}}+x_{13}\partial_{x_{27}}",
    ),
    (
        [1, 1, 1, 2, 2, 1],
        r"-x_1\partial_{x_{13}} +x_3\partial_{x_{19}}+x_4\partial_{x_{21}}-x_6\partial_{x_{23}}-x_{11}\partial_{x_{26}}+x_{15}\partial_{x_{27}}",
    ),
    (
        [1, 1, 2, 2, 2, 1],
        r"x_1\partial_{x_{16}} -x_2\partial_{x_{19}}-x_4\partial_{x_{22}}+x_6\partial_{x_{24}}-x_9\partial_{x_{26}}+x_{12}\partial_{x_{27}}",
    ),
    (
        [1, 1, 2, 3, 2, 1],
        r"x_1\partial_{x_{18}} -x_2\partial_{x_{21}}+x_3\partial_{x_{22}}-x_6\partial_{x_{25}}+x_7\partial_{x_{26}}-x_{10}\partial_{x_{27}}",
    ),
    (
        [1, 2, 2, 3, 2, 1],
        r"x_1\partial_{x_{20}} -x_2\partial_{x_{23}}+x_3\partial_{x_{24}}-x_4\partial_{x_{25}}-x_5\partial_{x_{26}}-x_8\partial_{x_{27}}",
    ),
    (
        [-1, 0, 0, 0, 0, 0],
        r"x_2\partial_{x_1}-x_{14}\partial_{x_{11}}-x_{17}\partial_{x_{15}} -x_{19}\partial_{x_{16}}-x_{21}\partial_{x_{18}}-x_{23}\partial_{x_{20}}",
    ),
    (
        [0, -1, 0, 0, 0, 0],
        r"x_6\partial_{x_4}+x_7\partial_{x_5}+x_{10}\partial_{x_8} -x_{20}\partial_{x_{18}}-x_{23}\partial_{x_{21}}-x_{24}\partial_{x_{22}}",
    ),
    (
        [0, 0, -1, 0, 0, 0],
        r"x_3\partial_{x_2}-x_{11}\partial_{x_9} -x_{15}\partial_{x_{12}}-x_{16}\partial_{x_{13}}-x_{22}\partial_{x_{21}} -x_{24}\partial_{x_{23}}",
    ),
    (
        [0, 0, 0, -1, 0, 0],
        r"x_4\partial_{x_3}+x_9\partial_{x_7}+x_{12}\partial_{x_{10}} +x_{18}\partial_{x_{16}}+x_{21}\partial_{x_{19}}-x_{25}\partial_{x_{24}}",
    ),
    (
        [0, 0, 0, 0, -1, 0],
        r"x_5\partial_{x_4}+x_7\partial_{x_6}+x_{13}\partial_{x_{12}} +x_{16}\partial_{x_{15}} +x_{19}\partial_{x_{17}}-x_{26}\partial_{x_{25}}",
    ),
    (
        [0, 0, 0, 0, 0, -1],
        r"x_8\partial_{x_5}+x_{10}\partial_{x_7}+x_{12}\partial_{x_9}+x_{15} \partial_{x_{11}} +x_{17}\partial_{14}-x_{27}\partial_{x_{26}}",
    ),
    (
        [-1, 0, -1, 0, 0, 0],
        r"-x_3\partial_{x_1}+x_{14}\partial_{x_9}+x_{17}\partial_{x_{12}}+x_{19}\partial_{x_{13}} -x_{22}\partial_{x_{18}}-x_{24}\partial_{x_{20}}",
    ),
    (
        [0, -1, 0, -1, 0, 0],
        r"x_6\partial_{x_3}-x_9\partial_{x_5}-x_{12}\partial_{x_8} -x_{20}\partial_{x_{16}}-x_{23}\partial_{x_{19}}-x_{25}\partial_{x_{22}}",
    ),
    (
        [0, 0, -1, -1, 0, 0],
        r"-x_4\partial_{x_2}-x_{11}\partial_{x_7}-x_{15}\partial_{x_{10}} +x_{18}\partial_{x_{13}}-x_{22}\partial_{x_{19}}-x_{25}\partial_{x_{23}}",
    ),
    (
        [0, 0, 0, -1, -1, 0],
        r"-x_5\partial_{x_3}+x_9\partial_{x_6}-x_{13}\partial_{x_{10}} +x_{18}\partial_{x_{15}}+x_{21}\partial_{x_{17}}-x_{26}\partial_{x_{24}}",
    ),
    (
        [0, 0, 0, 0, -1, -1],
        r"-x_8\partial_{x_4}-x_{10}\partial_{x_6}+x_{13}\partial_{x_9}+x_{16} \partial_{x_{11}} +x_{19}\partial_{14}-x_{27}\partial_{x_{25}}",
    ),
    (
        [-1, 0, -1, -1, 0, 0],
        r"x_4\partial_{x_1}+x_{14}\partial_{x_7}+x_{17}\partial_{x_{10}} -x_{21}\partial_{x_{13}}-x_{22}\partial_{x_{16}}-x_{25}\partial_{x_{20}}",
    ),
    (
        [0, -1, -1, -1, 0, 0],
        r"-x_6\partial_{x_2}+x_{11}\partial_{x_5}+x_{15}\partial_{x_8} -x_{20}\partial_{x_{13}}+x_{24}\partial_{x_{19}}-x_{25}\partial_{x_{21}}",
    ),
    (
        [0, -1, 0, -1, -1, 0],
        r"-x_7\partial_{x_3}-x_9\partial_{x_4}+x_{13}\partial_{x_8} -x_{20}\partial_{x_{15}}-x_{23}\partial_{x_{17}}-x_{26}\partial_{x_{22}}",
    ),
    (
        [0, 0, -1, -1, -1, 0],
        r"x_5\partial_{x_2}-x_{11}\partial_{x_6}+x_{16}\partial_{x_{10}} +x_{18}\partial_{x_{12}}-x_{22}\partial_{x_{17}}-x_{26}\partial_{x_{23}}",
    ),
    (
        [0, 0, 0, -1, -1, -1],
        r"x_8\partial_{x_3}-x_{12}\partial_{x_6}-x_{13}\partial_{x_7}+x_{18} \partial_{x_{11}} +x_{21}\partial_{14}-x_{27}\partial_{x_{24}}",
    ),
    (
        [-1, -1, -1, -1, 0, 0],
        r"x_6\partial_{x_1}-x_{14}\partial_{x_5}-x_{17}\partial_{x_8} +x_{23}\partial_{x_{13}}+x_{24}\partial_{x_{16}}-x_{25}\partial_{x_{18}}",
    ),
    (
        [-1, 0, -1, -1, -1, 0],
        r"-x_5\partial_{x_1}+x_{14}\partial_{x_6}-x_{19}\partial_{x_{10}} -x_{21}\partial_{x_{12}}-x_{22}\partial_{x_{15}}-x_{26}\partial_{x_{20}}",
    ),
    (
        [0, -1, -1, -1, -1, 0],
        r"x_7\partial_{x_2}+x_{11}\partial_{x_4}-x_{16}\partial_{x_8} -x_{20}\partial_{x_{12}}+x_{24}\partial_{x_{17}}-x_{26}\partial_{x_{21}}",
    ),
    (
        [0, -1, 0, -1, -1, -1],
        r"x_{10}\partial_{x_3}+x_{12}\partial_{x_4}+x_{13}\partial_{x_5}-x_{20} \partial_{x_{11}}-x_{23}\partial_{14}-x_{27}\partial_{x_{22}}",
    ),
    (
        [0, 0, -1, -1, -1, -1],
        r"-x_8\partial_{x_2}+x_{15}\partial_{x_6}+x_{16}\partial_{x_7}+x_{18} \partial_{x_9}-x_{22}\partial_{x_{14}}-x_{27}\partial_{x_{23}}",
    ),
    (
        [-1, -1, -1, -1, -1, 0],
        r"-x_7\partial_{x_1}-x_{14}\partial_{x_4}+x_{19}\partial_{x_8} +x_{23}\partial_{x_{12}}+x_{24}\partial_{x_{15}}-x_{26}\partial_{x_{18}}",
    ),
    (
        [-1, 0, -1, -1, -1, -1],
        r"x_8\partial_{x_1}-x_{17}\partial_{x_6}-x_{19}\partial_{x_7}-x_{21} \partial_{x_9}-x_{22}\partial_{x_{11}}-x_{27}\partial_{x_{20}}",
    ),
    (
        [0, -1, -1, -2, -1, 0],
        r"-x_9\partial_{x_2}+x_{11}\partial_{x_3}+x_{18}\partial_{x_8} -x_{20}\partial_{x_{10}}+x_{25}\partial_{x_{17}}-x_{26}\partial_{x_{19}}",
    ),
    (
        [0, -1, -1, -1, -1, -1],
        r"-x_{10}\partial_{x_2}-x_{15}\partial_{x_4}-x_{16}\partial_{x_5} -x_{20}\partial_{x_9}+x_{24}\partial_{x_{14}}-x_{27}\partial_{x_{21}}",
    ),
    (
        [-1, -1, -1, -2, -1, 0],
        r"x_9\partial_{x_1}-x_{14}\partial_{x_3}-x_{21}\partial_{x_8} +x_{23}\partial_{x_{10}}+x_{25}\partial_{x_{15}}-x_{26}\partial_{x_{16}}",
    ),
    (
        [-1, -1, -1, -1, -1, -1],
        r"x_{10}\partial_{x_1}+x_{17}\partial_{x_4}+x_{19}\partial_{x_5} +x_{23}\partial_{x_9}+x_{24}\partial_{x_{11}}-x_{27}\partial_{x_{18}}",
    ),
    (
        [0, -1, -1, -2, -1, -1],
        r"x_{12}\partial_{x_2}-x_{15}\partial_{x_3}+x_{18}\partial_{x_5} -x_{20}\partial_{x_7}+x_{25}\partial_{x_{14}}-x_{27}\partial_{x_{19}}",
    ),
    (
        [-1, -1, -2, -2, -1, 0],
        r"-x_{11}\partial_{x_1}+x_{14}\partial_{x_2}+x_{22}\partial_{x_8} -x_{24}\partial_{x_{10}}+x_{25}\partial_{x_{12}}-x_{26}\partial_{x_{13}}",
    ),
    (
        [-1, -1, -1, -2, -1, -1],
        r"-x_{12}\partial_{x_1}+x_{17}\partial_{x_3}-x_{21}\partial_{x_5} +x_{23}\partial_{x_7}+x_{25}\partial_{x_{11}}-x_{27}\partial_{x_{16}}",
    ),
    (
        [0, -1, -1, -2, -2, -1],
        r"-x_{13}\partial_{x_2}+x_{16}\partial_{x_3}+x_{18}\partial_{x_4} -x_{20}\partial_{x_6}+x_{26}\partial_{x_{14}}-x_{27}\partial_{x_{17}}",
    ),
    (
        [-1, -1, -2, -2, -1, -1],
        r"x_{15}\partial_{x_1}-x_{17}\partial_{x_2}+x_{22}\partial_{x_5} -x_{24}\partial_{x_7}+x_{25}\partial_{x_9}-x_{27}\partial_{x_{13}}",
    ),
    (
        [-1, -1, -1, -2, -2, -1],
        r"x_{13}\partial_{x_1}-x_{19}\partial_{x_3}-x_{21}\partial_{x_4} +x_{23}\partial_{x_6}+x_{26}\partial_{x_{11}}-x_{27}\partial_{x_{15}}",
    ),
    (
        [-1, -1, -2, -2, -2, -1],
        r"-x_{16}\partial_{x_1}+x_{19}\partial_{x_2}+x_{22}\partial_{x_4} -x_{24}\partial_{x_6}+x_{26}\partial_{x_9}-x_{27}\partial_{x_{12}}",
    ),
    (
        [-1, -1, -2, -3, -2, -1],
        r"x_{18}\partial_{x_1}-x_{21}\partial_{x_2}+x_{22}\partial_{x_3} -x_{25}\partial_{x_6}+x_{26}\partial_{x_7}-x_{27}\partial_{x_{10}}",
    ),
    (
        [-1, -2, -2, -3, -2, -1],
        r"x_{20}\partial_{x_1}-x_{23}\partial_{x_2}+x_{24}\partial_{x_3} -x_{25}\partial_{x_4}+x_{26}\partial_{x_5}-x_{27}\partial_{x_8}",
    ),
];

/// Weights of x_1..x_27: row i is (a_{i,1}, ..., a_{i,6}).
pub const V_WEIGHTS: [[i32; 6]; 27] = [
    [1, 0, 0, 0, 0, 0],
    [-1, 0, 1, 0, 0, 0],
    [0, 0, -1, 1, 0, 0],
    [0, 1, 0, -1, 1, 0],
    [0, 1, 0, 0, -1, 1],
    [0, -1, 0, 0, 1, 0],
    [0, -1, 0, 1, -1, 1],
    [0, 1, 0, 0, 0, -1],
    [0, 0, 1, -1, 0, 1],
    [0, -1, 0, 1, 0, -1],
    [1, 0, -1, 0, 0, 1],
    [0, 0, 1, -1, 1, -1],
    [0, 0, 1, 0, -1, 0],
    [-1, 0, 0, 0, 0, 1],
    [1, 0, -1, 0, 1, -1],
    [1, 0, -1, 1, -1, 0],
    [-1, 0, 0, 0, 1, -1],
    [1, 1, 0, -1, 0, 0],
    [-1, 0, 0, 1, -1, 0],
    [1, -1, 0, 0, 0, 0],
    [-1, 1, 1, -1, 0, 0],
    [0, 1, -1, 0, 0, 0],
    [-1, -1, 1, 0, 0, 0],
    [0, -1, -1, 1, 0, 0],
    [0, 0, 0, -1, 1, 0],
    [0, 0, 0, 0, -1, 1],
    [0, 0, 0, 0, 0, -1],
];

/// Weights of ζ_1..ζ_27: row i is (b_{i,1}, ..., b_{i,6}).
pub const DUAL_WEIGHTS: [[i32; 6]; 27] = [
    [0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 1, -1],
    [0, 0, 0, 1, -1, 0],
    [0, 1, 1, -1, 0, 0],
    [1, 1, -1, 0, 0, 0],
    [0, -1, 1, 0, 0, 0],
    [1, -1, -1, 1, 0, 0],
    [-1, 1, 0, 0, 0, 0],
    [1, 0, 0, -1, 1, 0],
    [-1, -1, 0, 1, 0, 0],
    [1, 0, 0, 0, -1, 1],
    [-1, 0, 1, -1, 1, 0],
    [0, 0, -1, 0, 1, 0],
    [1, 0, 0, 0, 0, -1],
    [-1, 0, 1, 0, -1, 1],
    [0, 0, -1, 1, -1, 1],
    [-1, 0, 1, 0, 0, -1],
    [0, 1, 0, -1, 0, 1],
    [0, 0, -1, 1, 0, -1],
    [0, -1, 0, 0, 0, 1],
    [0, 1, 0, -1, 1, -1],
    [0, 1, 0, 0, -1, 0],
    [0, -1, 0, 0, 1, -1],
    [0, -1, 0, 1, -1, 0],
    [0, 0, 1, -1, 0, 0],
    [1, 0, -1, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0],
];

/// One step of the lowering chain: ζ_target = sign · E_{-α_simple}(ζ_source).
#[derive(Clone, Copy, Debug)]
pub struct ChainStep {
    pub target: usize,
    pub source: usize,
    pub simple: usize,
    pub sign: i32,
}

pub const ZETA_CHAIN: [ChainStep; 14] = [
    ChainStep {
        target: 2,
        source: 1,
        simple: 6,
        sign: 1,
    },
    ChainStep {
        target: 3,
        source: 2,
        simple: 5,
        sign: 1,
    },
    ChainStep {
        target: 4,
        source: 3,
        simple: 4,
        sign: 1,
    },
    ChainStep {
        target: 5,
        source: 4,
        simple: 3,
        sign: 1,
    },
    ChainStep {
        target: 6,
        source: 4,
        simple: 2,
        sign: 1,
    },
    ChainStep {
        target: 7,
        source: 6,
        simple: 3,
        sign: 1,
    },
    ChainStep {
        target: 8,
        source: 5,
        simple: 1,
        sign: 1,
    },
    ChainStep {
        target: 9,
        source: 7,
        simple: 4,
        sign: 1,
    },
    ChainStep {
        target: 10,
        source: 7,
        simple: 1,
        sign: 1,
    },
    ChainStep {
        target: 11,
        source: 9,
        simple: 5,
        sign: -1,
    },
    ChainStep {
        target: 12,
        source: 10,
        simple: 4,
        sign: 1,
    },
    ChainStep {
        target: 13,
        source: 12,
        simple: 3,
        sign: 1,
    },
    ChainStep {
        target: 14,
        source: 11,
        simple: 6,
        sign: -1,
    },
    ChainStep {
        target: 15,
        source: 12,
        simple: 5,
        sign: -1,
    },
];

/// Printed expansions of ζ_1..ζ_15.
pub const ZETA_PRINTED: [&str; 15] = [
    r"x_1x_{14}+x_2x_{11}+x_3x_9-x_4x_7+x_5x_6",
    r"x_1x_{17}+x_2x_{15}+x_3x_{12}-x_4x_{10}+x_6x_8",
    r"x_1x_{19}+x_2x_{16}+x_3x_{13}-x_5x_{10} +x_7x_8",
    r"x_1x_{21}+x_2x_{18}+x_4x_{13}-x_5x_{12} +x_8x_9",
    r"-x_1x_{22}+x_3x_{18}-x_4x_{16}+x_5x_{15} -x_8x_{11}",
    r"-x_1x_{23}-x_2x_{20}+x_6x_{13}-x_7x_{12} +x_9x_{10}",
    r"x_1x_{24}-x_3x_{20}-x_6x_{16}+x_7x_{15} -x_{10}x_{11}",
    r"-x_2x_{22}-x_3x_{21}+x_4x_{19}-x_5x_{17} +x_8x_{14}",
    r"-x_1x_{25}-x_4x_{20}-x_6x_{18}+x_9x_{15} -x_{11}x_{12}",
    r"x_2x_{24}+x_3x_{23}+x_6x_{19}-x_7x_{17} +x_{10}x_{14}",
    r"-x_1x_{26}+x_5x_{20}+x_7x_{18}-x_9x_{16} +x_{11}x_{13}",
    r"-x_2x_{25}+x_4x_{23}+x_6x_{21}-x_9x_{17} +x_{12}x_{14}",
    r"-x_3x_{25}-x_4x_{24}-x_6x_{22}+x_{11}x_{17} -x_{14}x_{15}",
    r"-x_1x_{27}-x_8x_{20}-x_{10}x_{18}+x_{12}x_{16} -x_{13}x_{15}",
    r"-x_2x_{26}-x_5x_{23}-x_7x_{21}+x_9x_{19} -x_{13}x_{14}",
];

/// Expanded cubic invariant as printed (alignment markers kept; the
/// polynomial reader skips them).
pub const ETA_EXPANDED: &str = r"3[(x_1x_{14}+x_2x_{11}+x_3x_9)x_{27} +(x_1x_{17}+x_2x_{15}+x_3x_{12})x_{26}+(x_1x_{19}+x_2x_{16}\\ & &+x_3x_{13})x_{25}+(x_4x_{13}-x_5x_{12}+x_8x_9)x_{24}-(x_4x_{16}-x_5x_{15} +x_8x_{11})x_{23}+(x_6x_{13}\\ & &-x_7x_{12} +x_9x_{10})x_{22}+(x_7x_{15}+x_6x_{16} -x_{10}x_{11})x_{21}+(x_4x_{19}-x_5x_{17} +x_8x_{14})x_{20}\\ & &+(x_6x_{18}-x_9x_{15} +x_{11}x_{12})x_{19}+(x_{10}x_{14}-x_7x_{17})x_{18}+ (x_9x_{16}-x_{11}x_{13})x_{17}\\ & &-x_{12}x_{14}x_{16}+x_{14}x_{15}x_{13}] +(x_4x_7-x_5x_6)x_{27}+(x_4x_{10}-x_6x_8)x_{26}+(x_5x_{10} \\ & &-x_7x_8)x_{25}+(x_1x_{21}+x_2x_{18})x_{24}+(x_3x_{18}-x_1x_{22})x_{23}-(x_2x_{22} +x_3x_{21})x_{20}";
