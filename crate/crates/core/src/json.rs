//! Float and complex encodings for JSON reports.
//!
//! Floats are written with 17 significant digits so that parsing the text
//! back yields the identical `f64`.

use serde::{Deserialize, Serialize, Serializer};
use serde_json::value::RawValue;

use crate::linalg::{CMatrix, C64};

/// A float that serializes as `d.dddddddddddddddde±x`; non-finite values
/// become `null`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct F17(pub f64);

impl Serialize for F17 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(format!("{:.16e}", self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for F17 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(F17(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN)))
    }
}

pub fn serialize_f17<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    F17(*x).serialize(s)
}

pub fn serialize_f17_opt<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    x.map(F17).serialize(s)
}

pub fn serialize_f17_vec<S: Serializer>(x: &[f64], s: S) -> Result<S::Ok, S::Error> {
    x.iter().map(|&v| F17(v)).collect::<Vec<_>>().serialize(s)
}

/// Sparse matrix entry `[row, col, re, im]`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Entry(pub usize, pub usize, pub F17, pub F17);

/// Entries whose bit pattern is not `+0.0 + 0.0i`.
pub fn sparse(m: &CMatrix) -> Vec<Entry> {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let z = m[(i, j)];
            if z.re.to_bits() != 0 || z.im.to_bits() != 0 {
                out.push(Entry(i, j, F17(z.re), F17(z.im)));
            }
        }
    }
    out
}

pub fn dense(rows: usize, cols: usize, entries: &[Entry]) -> Option<CMatrix> {
    let mut m = CMatrix::zeros(rows, cols);
    for Entry(i, j, re, im) in entries {
        if *i >= rows || *j >= cols || !re.0.is_finite() || !im.0.is_finite() {
            return None;
        }
        m[(*i, *j)] = C64::new(re.0, im.0);
    }
    Some(m)
}

pub fn complex_pair(z: C64) -> [F17; 2] {
    [F17(z.re), F17(z.im)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_round_trip() {
        for x in [0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, f64::MIN_POSITIVE, 0.0] {
            let s = serde_json::to_string(&F17(x)).unwrap();
            let back: f64 = serde_json::from_str(&s).unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{s}");
        }
        assert_eq!(serde_json::to_string(&F17(f64::NAN)).unwrap(), "null");
    }
}
