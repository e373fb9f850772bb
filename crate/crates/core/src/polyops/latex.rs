//! Readers for the small LaTeX dialect the printed formulas use.
//!
//! Polynomials: sums of products of integers, `x_7` / `x_{14}`, and
//! parenthesized or bracketed subexpressions (`3[(x_1x_{14}+...)x_{27}+...]`).
//! First-order operators: `±x_i\partial_{x_j}` terms.
//!
//! Whitespace, `&` and `\\` (alignment/line breaks) are ignored. Two known
//! misprints in operator formulas are accepted and reported:
//! `\partial_{14}` (the `x_` is missing) and `\partial_{x_{x_{24}}}` (doubled).

use super::diffop::DiffOp;
use super::monomial::NVARS;
use super::poly::Polynomial;
use crate::error::{Error, Result};
use crate::scalar::Coeff;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    context: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str, context: &'a str) -> Self {
        Cursor {
            src: src.as_bytes(),
            pos: 0,
            context,
        }
    }

    fn skip_noise(&mut self) {
        loop {
            match self.src.get(self.pos) {
                Some(b' ' | b'\n' | b'\t' | b'\r' | b'&') => self.pos += 1,
                Some(b'\\') if self.src.get(self.pos + 1) == Some(&b'\\') => self.pos += 2,
                _ => break,
            }
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_noise();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, lit: &str) -> bool {
        self.skip_noise();
        if self.src[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.eat(lit) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {lit:?}")))
        }
    }

    fn error(&self, msg: &str) -> Error {
        let rest: String = String::from_utf8_lossy(&self.src[self.pos..])
            .chars()
            .take(24)
            .collect();
        Error::Parse {
            context: self.context.to_string(),
            message: format!("{msg} at byte {} (near {rest:?})", self.pos),
        }
    }

    fn digits(&mut self) -> Result<u64> {
        self.skip_noise();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error("number too large"))
    }

    /// `7` or `{14}`: a TeX subscript argument that is a bare number.
    fn subscript_number(&mut self) -> Result<u64> {
        if self.eat("{") {
            let n = self.digits()?;
            self.expect("}")?;
            Ok(n)
        } else {
            self.skip_noise();
            match self.src.get(self.pos) {
                Some(b) if b.is_ascii_digit() => {
                    self.pos += 1;
                    Ok((b - b'0') as u64)
                }
                _ => Err(self.error("expected subscript")),
            }
        }
    }

    /// After `x_`: the 1-based variable label.
    fn var_label(&mut self) -> Result<usize> {
        let n = self.subscript_number()? as usize;
        if !(1..=NVARS).contains(&n) {
            return Err(self.error(&format!("variable x_{n} out of range")));
        }
        Ok(n)
    }

    /// Display form `x14`.
    fn plain_label(&mut self) -> Result<usize> {
        let n = self.digits()? as usize;
        if !(1..=NVARS).contains(&n) {
            return Err(self.error(&format!("variable x{n} out of range")));
        }
        Ok(n)
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

/// Parses a printed polynomial.
pub fn parse_polynomial<C: Coeff>(src: &str, context: &str) -> Result<Polynomial<C>> {
    let mut c = Cursor::new(src, context);
    let p = expr(&mut c)?;
    if !c.at_end() {
        return Err(c.error("trailing input"));
    }
    Ok(p)
}

fn expr<C: Coeff>(c: &mut Cursor) -> Result<Polynomial<C>> {
    let mut acc = Polynomial::zero();
    let mut first = true;
    loop {
        let sign = match c.peek() {
            Some(b'+') => {
                c.pos += 1;
                1
            }
            Some(b'-') => {
                c.pos += 1;
                -1
            }
            _ if first => 1,
            _ => break,
        };
        first = false;
        let t = term(c)?;
        acc = if sign > 0 { acc.add(&t) } else { acc.sub(&t) };
    }
    Ok(acc)
}

fn term<C: Coeff>(c: &mut Cursor) -> Result<Polynomial<C>> {
    let mut acc = Polynomial::one();
    let mut factors = 0;
    loop {
        let f = match c.peek() {
            Some(b) if b.is_ascii_digit() => {
                let n = c.digits()?;
                Polynomial::constant(C::from_i64(n as i64))
            }
            Some(b'x') => {
                c.pos += 1;
                let label = if c.eat("_") {
                    c.var_label()?
                } else {
                    c.plain_label()?
                };
                Polynomial::x(label)
            }
            Some(b'(') => {
                c.pos += 1;
                let e = expr(c)?;
                c.expect(")")?;
                e
            }
            Some(b'[') => {
                c.pos += 1;
                let e = expr(c)?;
                c.expect("]")?;
                e
            }
            _ => break,
        };
        let f = if c.eat("^") {
            f.pow(c.subscript_number()? as u32)
        } else {
            f
        };
        acc = acc.mul(&f);
        factors += 1;
    }
    if factors == 0 {
        return Err(c.error("expected a factor"));
    }
    Ok(acc)
}

/// Parses `±x_i\partial_{x_j} ± ...`. Returns the operator and a note for
/// every misprint that had to be normalized.
pub fn parse_first_order<C: Coeff>(src: &str, context: &str) -> Result<(DiffOp<C>, Vec<String>)> {
    let mut c = Cursor::new(src, context);
    let mut op = DiffOp::<C>::zero();
    let mut notes = Vec::new();
    let mut first = true;
    while !c.at_end() {
        let sign = if c.eat("+") {
            C::one()
        } else if c.eat("-") {
            -C::one()
        } else if first {
            C::one()
        } else {
            return Err(c.error("expected + or -"));
        };
        first = false;
        c.expect("x_")?;
        let i = c.var_label()?;
        c.expect("\\partial_")?;
        c.expect("{")?;
        let j = if c.eat("x_{x_") {
            let j = c.var_label()?;
            c.expect("}")?;
            notes.push(format!(
                "\\partial_{{x_{{x_{{{j}}}}}}} read as \\partial_{{x_{{{j}}}}}"
            ));
            j
        } else if c.eat("x_") {
            c.var_label()?
        } else {
            let j = c.digits()? as usize;
            if !(1..=NVARS).contains(&j) {
                return Err(c.error("derivative index out of range"));
            }
            notes.push(format!("\\partial_{{{j}}} read as \\partial_{{x_{{{j}}}}}"));
            j
        };
        c.expect("}")?;
        if !op
            .coeff(&super::Monomial::var(i - 1), &super::Monomial::var(j - 1))
            .is_zero()
        {
            return Err(c.error(&format!("term x_{i}\\partial_{{x_{j}}} repeated")));
        }
        op = op.add(&DiffOp::x_d(i - 1, j - 1).scale(&sign));
    }
    Ok((op, notes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = Polynomial<BigRational>;

    #[test]
    fn polynomial_forms() {
        let p: P = parse_polynomial("x_1x_{14}+x_2x_{11}+x_3x_9-x_4x_7+x_5x_6", "t").unwrap();
        assert_eq!(p.to_string(), "x1x14 + x2x11 + x3x9 - x4x7 + x5x6");
        let q: P =
            parse_polynomial("3[(x_1 + x_2)x_{27}] & \\\\ -(x_4x_7-x_5x_6)x_{27}", "t").unwrap();
        assert_eq!(q.to_string(), "-x4x7x27 + x5x6x27 + 3x1x27 + 3x2x27");
        assert!(parse_polynomial::<BigRational>("x_{28}", "t").is_err());
        assert!(parse_polynomial::<BigRational>("(x_1", "t").is_err());
    }

    #[test]
    fn operator_forms_and_misprints() {
        let (op, notes) =
            parse_first_order::<BigRational>("-x_1\\partial_{x_2}+x_{11}\\partial_{x_{14}}", "t")
                .unwrap();
        assert!(notes.is_empty());
        assert_eq!(op.to_string(), "-x1∂x2 + x11∂x14");
        let (op, notes) = parse_first_order::<BigRational>(
            "x_{17}\\partial_{14}-x_{19}\\partial_{x_{x_{24}}}",
            "t",
        )
        .unwrap();
        assert_eq!(notes.len(), 2);
        assert_eq!(op.to_string(), "x17∂x14 - x19∂x24");
    }
}
