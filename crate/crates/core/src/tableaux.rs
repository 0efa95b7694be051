//! Schensted row insertion over exact scalars and the shape statistics the
//! GK-dimension formulas consume.
//!
//! Insertion bumps the leftmost entry strictly greater than the incoming
//! value, so rows are weakly increasing and equal values share a row.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::ops::Deref;

use crate::error::{Error, Result};
use crate::exact::{ExactScalar, Rational};

/// A partition: weakly decreasing positive row lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Shape {
    rows: Vec<usize>,
}

impl Shape {
    /// Trailing zero rows are dropped. Returns `None` when the rows are not
    /// weakly decreasing.
    pub fn new(mut rows: Vec<usize>) -> Option<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).all(|w| w[0] >= w[1]) && !rows.contains(&0) {
            Some(Shape { rows })
        } else {
            None
        }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Column lengths, left to right.
    pub fn conjugate(&self) -> Shape {
        let width = self.rows.first().copied().unwrap_or(0);
        let cols = (0..width).map(|c| self.rows.iter().take_while(|&&r| r > c).count()).collect();
        Shape { rows: cols }
    }

    /// `Σ (i-1)·p_i` with 1-based rows.
    pub fn weighted_row_sum(&self) -> usize {
        weighted_sum(&self.rows)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

fn weighted_sum(rows: &[usize]) -> usize {
    rows.iter().enumerate().map(|(i, p)| i * p).sum()
}

/// Full insertion tableau of `xs`, row-major.
pub fn insertion_tableau<T: Ord + Clone>(xs: &[T]) -> Vec<Vec<T>> {
    let mut rows: Vec<Vec<T>> = Vec::new();
    for x in xs {
        let mut v = x.clone();
        let mut placed = false;
        for row in rows.iter_mut() {
            let pos = row.partition_point(|e| *e <= v);
            if pos == row.len() {
                row.push(v.clone());
                placed = true;
                break;
            }
            v = core::mem::replace(&mut row[pos], v);
        }
        if !placed {
            rows.push(alloc::vec![v]);
        }
    }
    rows
}

/// Shape of the insertion tableau of a totally ordered sequence.
pub fn rs_shape_ordered<T: Ord + Clone>(xs: &[T]) -> Shape {
    Shape { rows: insertion_tableau(xs).iter().map(Vec::len).collect() }
}

/// `(p^ev, p^odd)`: per row, the number of boxes `(i, j)` with `i + j` even
/// (resp. odd), rows and columns 1-based.
pub fn even_odd_counts(shape: &Shape) -> (Vec<usize>, Vec<usize>) {
    shape
        .rows
        .iter()
        .enumerate()
        .map(|(idx, &p)| {
            // idx is 0-based, so idx even means an odd row number.
            let ev = if idx % 2 == 0 { p.div_ceil(2) } else { p / 2 };
            (ev, p - ev)
        })
        .unzip()
}

/// An ordered finite sequence of exact scalars.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ScalarSequence(Vec<ExactScalar>);

impl ScalarSequence {
    pub fn new(items: Vec<ExactScalar>) -> Self {
        ScalarSequence(items)
    }

    pub fn into_inner(self) -> Vec<ExactScalar> {
        self.0
    }

    /// Rational parts, after checking that every entry shares the first
    /// entry's generic part.
    fn ordered_keys(&self) -> Result<Vec<Rational>> {
        let Some(first) = self.0.first() else {
            return Ok(Vec::new());
        };
        self.0
            .iter()
            .map(|x| {
                if x.same_generic_part(first) {
                    Ok(x.rational_part())
                } else {
                    Err(Error::IncomparableScalars)
                }
            })
            .collect()
    }

    pub fn rs_shape(&self) -> Result<Shape> {
        Ok(rs_shape_ordered(&self.ordered_keys()?))
    }

    /// `(x_1, …, x_n, -x_n, …, -x_1)`.
    pub fn minus_double(&self) -> ScalarSequence {
        let mut out = self.0.clone();
        out.extend(self.0.iter().rev().map(|x| -x));
        ScalarSequence(out)
    }

    /// `Σ (k-1)·p_k` over the rows of the RS shape.
    pub fn f_a(&self) -> Result<usize> {
        Ok(self.rs_shape()?.weighted_row_sum())
    }

    /// `Σ (k-1)·p_k^ev` over the rows of the RS shape.
    pub fn f_d(&self) -> Result<usize> {
        let (ev, _) = even_odd_counts(&self.rs_shape()?);
        Ok(weighted_sum(&ev))
    }

    /// Insertion tableau as text: one row per line, entries separated by a
    /// single space.
    pub fn render_tableau(&self) -> Result<String> {
        let keys = self.ordered_keys()?;
        let first = self.0.first().cloned().unwrap_or_default();
        let generic = ExactScalar::from_parts(Rational::default(), first.generic_part().clone());
        let mut out = String::new();
        for row in insertion_tableau(&keys) {
            let line: Vec<String> =
                row.iter().map(|r| alloc::format!("{}", &generic + *r)).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        Ok(out)
    }
}

impl Deref for ScalarSequence {
    type Target = [ExactScalar];

    fn deref(&self) -> &[ExactScalar] {
        &self.0
    }
}

impl From<Vec<ExactScalar>> for ScalarSequence {
    fn from(items: Vec<ExactScalar>) -> Self {
        ScalarSequence(items)
    }
}

impl FromIterator<ExactScalar> for ScalarSequence {
    fn from_iter<I: IntoIterator<Item = ExactScalar>>(iter: I) -> Self {
        ScalarSequence(iter.into_iter().collect())
    }
}
