//! The line-oriented algebra-document format.
//!
//! ```text
//! # comment
//! field rational          (or: field gf <p>)
//! dims <d0> <d1>          (even dimension, odd dimension)
//! p <i> <j> <k> <value>   e_i o e_j += value * e_k; value = int or num/den
//! ```
//!
//! Indices are 0-based with the even basis first. Unlisted constants are
//! zero; listing the same (i, j, k) twice is an error. Products violating
//! the grading are rejected at parse time. Module documents extend the
//! grammar with `mdim <m>` and `l <x> <row> <col> <value>` /
//! `r <x> <row> <col> <value>` lines giving the action matrices of base
//! basis element x.

use novikov::matrix::Matrix;
use novikov::modules::NovikovModule;
use novikov::scalar::{FieldDescriptor, Scalar};
use novikov::SuperAlgebra;
use num::BigInt;
use std::collections::HashSet;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

fn err<T>(line: usize, col: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, col, msg: msg.into() })
}

/// Tokens of one line with their 1-based starting columns, comments
/// stripped.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let body = match line.find('#') {
        Some(idx) => &line[..idx],
        None => line,
    };
    let mut out = Vec::new();
    let mut col = 0usize;
    for piece in body.split_inclusive(char::is_whitespace) {
        let trimmed = piece.trim_end_matches(char::is_whitespace);
        if !trimmed.is_empty() {
            out.push((col + 1, trimmed));
        }
        col += piece.chars().count();
    }
    out
}

fn parse_index(line: usize, (col, tok): (usize, &str), what: &str, bound: usize) -> Result<usize, ParseError> {
    let v: usize = tok
        .parse()
        .map_err(|_| ParseError { line, col, msg: format!("{what} must be a non-negative integer, got `{tok}`") })?;
    if v >= bound {
        return err(line, col, format!("{what} {v} out of range (must be < {bound})"));
    }
    Ok(v)
}

/// Parse a scalar literal — an integer or `num/den` — into `field`.
pub fn parse_scalar_literal(field: FieldDescriptor, tok: &str) -> Result<Scalar, String> {
    let (num_str, den_str) = match tok.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (tok, None),
    };
    let num = BigInt::from_str(num_str).map_err(|_| format!("bad value `{tok}`"))?;
    let den = match den_str {
        Some(d) => BigInt::from_str(d).map_err(|_| format!("bad value `{tok}`"))?,
        None => BigInt::from(1),
    };
    field.fraction(&num, &den).map_err(|e| format!("bad value `{tok}`: {e}"))
}

fn parse_value(
    line: usize,
    (col, tok): (usize, &str),
    field: FieldDescriptor,
) -> Result<Scalar, ParseError> {
    parse_scalar_literal(field, tok).map_err(|msg| ParseError { line, col, msg })
}

struct Directives<'a> {
    field: Option<FieldDescriptor>,
    dims: Option<(usize, usize)>,
    products: Vec<(usize, usize, usize, Scalar)>,
    seen_products: HashSet<(usize, usize, usize)>,
    mdim: Option<usize>,
    actions: Vec<(char, usize, usize, usize, Scalar)>,
    seen_actions: HashSet<(char, usize, usize, usize)>,
    allow_module: bool,
    last_line: usize,
    text: &'a str,
}

impl<'a> Directives<'a> {
    fn new(text: &'a str, allow_module: bool) -> Self {
        Directives {
            field: None,
            dims: None,
            products: Vec::new(),
            seen_products: HashSet::new(),
            mdim: None,
            actions: Vec::new(),
            seen_actions: HashSet::new(),
            allow_module,
            last_line: 0,
            text,
        }
    }

    fn field(&self, line: usize) -> Result<FieldDescriptor, ParseError> {
        match self.field {
            Some(f) => Ok(f),
            None => err(line, 1, "the `field` line must come before this one"),
        }
    }

    fn dims(&self, line: usize) -> Result<(usize, usize), ParseError> {
        match self.dims {
            Some(d) => Ok(d),
            None => err(line, 1, "the `dims` line must come before this one"),
        }
    }

    fn consume(&mut self) -> Result<(), ParseError> {
        for (idx, raw) in self.text.lines().enumerate() {
            let line = idx + 1;
            self.last_line = line;
            let toks = tokens(raw);
            let Some(&(_, head)) = toks.first() else { continue };
            match head {
                "field" => self.take_field(line, &toks)?,
                "dims" => self.take_dims(line, &toks)?,
                "p" => self.take_product(line, &toks)?,
                "mdim" if self.allow_module => self.take_mdim(line, &toks)?,
                "l" | "r" if self.allow_module => self.take_action(line, &toks)?,
                other => {
                    return err(line, toks[0].0, format!("unknown directive `{other}`"));
                }
            }
        }
        Ok(())
    }

    fn expect_args(line: usize, toks: &[(usize, &str)], n: usize) -> Result<(), ParseError> {
        match toks.len().cmp(&(n + 1)) {
            std::cmp::Ordering::Less => err(
                line,
                toks.last().map_or(1, |(c, t)| c + t.chars().count()),
                format!("`{}` needs {} arguments", toks[0].1, n),
            ),
            std::cmp::Ordering::Greater => {
                err(line, toks[n + 1].0, format!("unexpected extra token `{}`", toks[n + 1].1))
            }
            std::cmp::Ordering::Equal => Ok(()),
        }
    }

    fn take_field(&mut self, line: usize, toks: &[(usize, &str)]) -> Result<(), ParseError> {
        if self.field.is_some() {
            return err(line, toks[0].0, "duplicate `field` line");
        }
        match toks.get(1).map(|t| t.1) {
            Some("rational") => {
                Self::expect_args(line, toks, 1)?;
                self.field = Some(FieldDescriptor::Rational);
            }
            Some("gf") => {
                Self::expect_args(line, toks, 2)?;
                let (col, tok) = toks[2];
                let p: u64 = tok.parse().map_err(|_| ParseError {
                    line,
                    col,
                    msg: format!("`{tok}` is not a valid characteristic"),
                })?;
                self.field = Some(FieldDescriptor::gf(p).map_err(|e| ParseError {
                    line,
                    col,
                    msg: e.to_string(),
                })?);
            }
            _ => return err(line, toks[0].0, "expected `field rational` or `field gf <p>`"),
        }
        Ok(())
    }

    fn take_dims(&mut self, line: usize, toks: &[(usize, &str)]) -> Result<(), ParseError> {
        self.field(line)?;
        if self.dims.is_some() {
            return err(line, toks[0].0, "duplicate `dims` line");
        }
        Self::expect_args(line, toks, 2)?;
        let d0 = parse_index(line, toks[1], "even dimension", usize::MAX)?;
        let d1 = parse_index(line, toks[2], "odd dimension", usize::MAX)?;
        self.dims = Some((d0, d1));
        Ok(())
    }

    fn take_product(&mut self, line: usize, toks: &[(usize, &str)]) -> Result<(), ParseError> {
        let field = self.field(line)?;
        let (d0, d1) = self.dims(line)?;
        let n = d0 + d1;
        Self::expect_args(line, toks, 4)?;
        let i = parse_index(line, toks[1], "index", n)?;
        let j = parse_index(line, toks[2], "index", n)?;
        let k = parse_index(line, toks[3], "index", n)?;
        let parity = |x: usize| u8::from(x >= d0);
        if parity(k) != parity(i) ^ parity(j) {
            return err(
                line,
                toks[1].0,
                format!(
                    "grading violation at ({i}, {j}, {k}): the product of parities {} and {} cannot reach parity {}",
                    parity(i),
                    parity(j),
                    parity(k)
                ),
            );
        }
        if !self.seen_products.insert((i, j, k)) {
            return err(line, toks[1].0, format!("duplicate product line for ({i}, {j}, {k})"));
        }
        let v = parse_value(line, toks[4], field)?;
        self.products.push((i, j, k, v));
        Ok(())
    }

    fn take_mdim(&mut self, line: usize, toks: &[(usize, &str)]) -> Result<(), ParseError> {
        self.field(line)?;
        let (_, d1) = self.dims(line)?;
        if d1 != 0 {
            return err(line, toks[0].0, "a module base must be purely even (dims with d1 = 0)");
        }
        if self.mdim.is_some() {
            return err(line, toks[0].0, "duplicate `mdim` line");
        }
        Self::expect_args(line, toks, 1)?;
        self.mdim = Some(parse_index(line, toks[1], "module dimension", usize::MAX)?);
        Ok(())
    }

    fn take_action(&mut self, line: usize, toks: &[(usize, &str)]) -> Result<(), ParseError> {
        let field = self.field(line)?;
        let (d0, _) = self.dims(line)?;
        let Some(m) = self.mdim else {
            return err(line, toks[0].0, "the `mdim` line must come before action lines");
        };
        Self::expect_args(line, toks, 4)?;
        let side = toks[0].1.chars().next().unwrap();
        let x = parse_index(line, toks[1], "base index", d0)?;
        let row = parse_index(line, toks[2], "row", m)?;
        let col = parse_index(line, toks[3], "column", m)?;
        if !self.seen_actions.insert((side, x, row, col)) {
            return err(
                line,
                toks[1].0,
                format!("duplicate `{side}` line for base element {x}, entry ({row}, {col})"),
            );
        }
        let v = parse_value(line, toks[4], field)?;
        self.actions.push((side, x, row, col, v));
        Ok(())
    }

    fn into_algebra(self) -> Result<SuperAlgebra, ParseError> {
        let end = self.last_line + 1;
        let Some(field) = self.field else {
            return err(end, 1, "missing `field` line");
        };
        let Some((d0, d1)) = self.dims else {
            return err(end, 1, "missing `dims` line");
        };
        SuperAlgebra::from_entries(d0, d1, field, &self.products)
            .map_err(|e| ParseError { line: end, col: 1, msg: e.to_string() })
    }
}

/// Parse an algebra document.
pub fn parse_algebra(text: &str) -> Result<SuperAlgebra, ParseError> {
    let mut d = Directives::new(text, false);
    d.consume()?;
    d.into_algebra()
}

/// Parse a self-contained module document: base algebra lines plus
/// `mdim` and `l`/`r` action lines.
pub fn parse_module(text: &str) -> Result<NovikovModule, ParseError> {
    let mut d = Directives::new(text, true);
    d.consume()?;
    let end = d.last_line + 1;
    let Some(m) = d.mdim else {
        return err(end, 1, "missing `mdim` line");
    };
    let actions = std::mem::take(&mut d.actions);
    let base = d.into_algebra()?;
    let field = base.field();
    let mut l = vec![Matrix::zero(m, m, field); base.n()];
    let mut r = vec![Matrix::zero(m, m, field); base.n()];
    for (side, x, row, col, v) in actions {
        let target = if side == 'l' { &mut l[x] } else { &mut r[x] };
        target.set(row, col, v).expect("bounds checked at parse");
    }
    NovikovModule::new(base, m, l, r)
        .map_err(|e| ParseError { line: end, col: 1, msg: e.to_string() })
}

fn field_line(field: FieldDescriptor) -> String {
    match field.order() {
        None => "field rational".to_string(),
        Some(p) => format!("field gf {p}"),
    }
}

/// Canonical text form: field, dims, then nonzero products sorted by
/// (i, j, k). Values print reduced (rationals) or as 0..p-1 residues, so
/// `parse(emit(a)) == a` and emit is idempotent under reparsing.
pub fn emit_algebra(alg: &SuperAlgebra) -> String {
    let mut out = String::new();
    out.push_str(&field_line(alg.field()));
    out.push('\n');
    out.push_str(&format!("dims {} {}\n", alg.d0(), alg.d1()));
    let n = alg.n();
    for i in 0..n {
        for j in 0..n {
            for (k, v) in alg.basis_product(i, j).iter().enumerate() {
                if !v.is_zero() {
                    out.push_str(&format!("p {i} {j} {k} {v}\n"));
                }
            }
        }
    }
    out
}

/// Canonical text form of a module document: the base algebra lines, then
/// `mdim`, then nonzero `l` lines, then nonzero `r` lines, each sorted.
pub fn emit_module(module: &NovikovModule) -> String {
    let mut out = emit_algebra(module.base());
    out.push_str(&format!("mdim {}\n", module.dim()));
    for (tag, mats) in [('l', module.l_matrices()), ('r', module.r_matrices())] {
        for (x, mat) in mats.iter().enumerate() {
            for row in 0..module.dim() {
                for col in 0..module.dim() {
                    let v = mat.get(row, col);
                    if !v.is_zero() {
                        out.push_str(&format!("{tag} {x} {row} {col} {v}\n"));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_odd_square_document() {
        let text = "# odd generator squaring to the even one\nfield rational\ndims 1 1\np 1 1 0 1\n";
        let alg = parse_algebra(text).unwrap();
        assert_eq!((alg.d0(), alg.d1()), (1, 1));
        assert_eq!(*alg.c(1, 1, 0), FieldDescriptor::Rational.one());
        assert!(alg.grading_ok());
    }

    #[test]
    fn empty_products_give_the_zero_algebra() {
        let alg = parse_algebra("field gf 5\ndims 2 1\n").unwrap();
        assert!(alg.table().iter().all(Scalar::is_zero));
    }

    #[test]
    fn grading_violations_are_rejected_with_position() {
        let e = parse_algebra("field rational\ndims 1 1\np 0 0 1 1\n").unwrap_err();
        assert_eq!((e.line, e.col), (3, 3));
        assert!(e.msg.contains("grading violation at (0, 0, 1)"));
    }

    #[test]
    fn duplicates_and_unknown_directives_error() {
        let e = parse_algebra("field rational\ndims 1 1\np 1 1 0 1\np 1 1 0 2\n").unwrap_err();
        assert_eq!(e.line, 4);
        assert!(e.msg.contains("duplicate product line for (1, 1, 0)"));
        let e = parse_algebra("field rational\ndims 1 1\nq 0 0 0 1\n").unwrap_err();
        assert!(e.msg.contains("unknown directive `q`"));
    }

    #[test]
    fn structural_errors_are_positioned() {
        assert!(parse_algebra("dims 1 1\n").unwrap_err().msg.contains("`field` line must come"));
        assert!(parse_algebra("field gf 6\n").unwrap_err().msg.contains("prime"));
        assert!(parse_algebra("field rational\n").unwrap_err().msg.contains("missing `dims`"));
        let e = parse_algebra("field rational\ndims 2 0\np 0 2 0 1\n").unwrap_err();
        assert!(e.msg.contains("index 2 out of range"));
        let e = parse_algebra("field rational\ndims 1 0\np 0 0 0 1 5\n").unwrap_err();
        assert!(e.msg.contains("unexpected extra token `5`"));
    }

    #[test]
    fn values_accept_fractions_in_both_fields() {
        let alg = parse_algebra("field rational\ndims 1 0\np 0 0 0 -3/6\n").unwrap();
        assert_eq!(alg.c(0, 0, 0).to_string(), "-1/2");
        // 1/2 = 3 mod 5
        let alg = parse_algebra("field gf 5\ndims 1 0\np 0 0 0 1/2\n").unwrap();
        assert_eq!(alg.c(0, 0, 0).to_string(), "3");
    }

    #[test]
    fn emit_then_parse_round_trips_and_canonicalizes() {
        let text = "field rational\n# scrambled order, unreduced value\ndims 1 2\np 2 1 0 -2/2\np 1 2 0 1\n";
        let alg = parse_algebra(text).unwrap();
        let emitted = emit_algebra(&alg);
        assert_eq!(
            emitted,
            "field rational\ndims 1 2\np 1 2 0 1\np 2 1 0 -1\n"
        );
        assert_eq!(parse_algebra(&emitted).unwrap(), alg);
        assert_eq!(emit_algebra(&parse_algebra(&emitted).unwrap()), emitted);
    }

    #[test]
    fn module_documents_round_trip() {
        let text = "field rational\ndims 1 0\np 0 0 0 1\nmdim 2\nl 0 0 0 2\nr 0 0 0 1\nr 0 1 1 1\n";
        let module = parse_module(text).unwrap();
        assert_eq!(module.dim(), 2);
        assert_eq!(module.l(0).get(0, 0).to_string(), "2");
        let emitted = emit_module(&module);
        assert_eq!(parse_module(&emitted).unwrap(), module);
        assert_eq!(emit_module(&parse_module(&emitted).unwrap()), emitted);
    }

    #[test]
    fn module_documents_validate_their_extensions() {
        let e = parse_module("field rational\ndims 1 1\nmdim 2\n").unwrap_err();
        assert!(e.msg.contains("purely even"));
        let e = parse_module("field rational\ndims 1 0\nl 0 0 0 1\n").unwrap_err();
        assert!(e.msg.contains("`mdim` line must come before"));
        let e = parse_module("field rational\ndims 1 0\nmdim 2\nl 1 0 0 1\n").unwrap_err();
        assert!(e.msg.contains("base index 1 out of range"));
        let e =
            parse_module("field rational\ndims 1 0\nmdim 2\nl 0 0 0 1\nl 0 0 0 2\n").unwrap_err();
        assert!(e.msg.contains("duplicate `l` line"));
        // plain algebra documents reject module directives
        let e = parse_algebra("field rational\ndims 1 0\nmdim 2\n").unwrap_err();
        assert!(e.msg.contains("unknown directive `mdim`"));
    }
}
