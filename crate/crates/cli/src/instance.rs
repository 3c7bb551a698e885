//! Named inputs of one harness trial, with a replayable text form.
//!
//! ```text
//! property P5
//! tag clause variant
//! matrix A
//! 2 2
//! 0 1
//! -inf 3
//! row x
//! 1 2
//! 0 1/2
//! scalar l -3
//! ```

use std::fmt;
use std::str::FromStr;

use trop_core::text::Reader;
use trop_core::{Orientation, TropError, TropMatrix, TropScalar, TropVector};

#[derive(Clone, Debug, PartialEq)]
pub enum Item {
    Matrix(TropMatrix),
    Vector(TropVector),
    Scalar(TropScalar),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub property: String,
    pub tags: Vec<(String, String)>,
    pub items: Vec<(String, Item)>,
}

impl Instance {
    pub fn new(property: &str) -> Self {
        Instance {
            property: property.to_string(),
            tags: Vec::new(),
            items: Vec::new(),
        }
    }

    pub fn tag(mut self, key: &str, value: impl Into<String>) -> Self {
        self.tags.push((key.to_string(), value.into()));
        self
    }

    pub fn matrix(mut self, name: &str, m: TropMatrix) -> Self {
        self.items.push((name.to_string(), Item::Matrix(m)));
        self
    }

    pub fn vector(mut self, name: &str, v: TropVector) -> Self {
        self.items.push((name.to_string(), Item::Vector(v)));
        self
    }

    pub fn scalar(mut self, name: &str, s: TropScalar) -> Self {
        self.items.push((name.to_string(), Item::Scalar(s)));
        self
    }

    fn item(&self, name: &str) -> Result<&Item, String> {
        self.items
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, it)| it)
            .ok_or_else(|| format!("instance has no item `{name}`"))
    }

    pub fn get_tag(&self, key: &str) -> Result<&str, String> {
        self.tags
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
            .ok_or_else(|| format!("instance has no tag `{key}`"))
    }

    pub fn get_matrix(&self, name: &str) -> Result<&TropMatrix, String> {
        match self.item(name)? {
            Item::Matrix(m) => Ok(m),
            _ => Err(format!("`{name}` is not a matrix")),
        }
    }

    pub fn get_vector(&self, name: &str) -> Result<&TropVector, String> {
        match self.item(name)? {
            Item::Vector(v) => Ok(v),
            _ => Err(format!("`{name}` is not a vector")),
        }
    }

    pub fn get_scalar(&self, name: &str) -> Result<&TropScalar, String> {
        match self.item(name)? {
            Item::Scalar(s) => Ok(s),
            _ => Err(format!("`{name}` is not a scalar")),
        }
    }

    /// Every vector item named `prefix0`, `prefix1`, ... in order.
    pub fn vectors_with_prefix(&self, prefix: &str) -> Vec<TropVector> {
        (0..)
            .map_while(|i| self.get_vector(&format!("{prefix}{i}")).ok().cloned())
            .collect()
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "property {}", self.property)?;
        for (k, v) in &self.tags {
            writeln!(f, "tag {k} {v}")?;
        }
        for (name, item) in &self.items {
            match item {
                Item::Matrix(m) => write!(f, "matrix {name}\n{m}")?,
                Item::Vector(v) => write!(
                    f,
                    "{} {name}\n{}",
                    v.orientation().tag(),
                    TropMatrix::from_vector(v)
                )?,
                Item::Scalar(s) => writeln!(f, "scalar {name} {s}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Instance {
    type Err = TropError;

    fn from_str(text: &str) -> Result<Self, TropError> {
        let mut reader = Reader::new(text);
        let (no, head) = reader.next_tokens("`property <id>`")?;
        let [(_, "property"), (_, id)] = head[..] else {
            return Err(TropError::parse(no, 1, "expected `property <id>`"));
        };
        let mut inst = Instance::new(id);
        while !reader.is_done() {
            let (no, toks) = reader.next_tokens("instance item")?;
            match toks[..] {
                [(_, "tag"), (_, key), (_, value)] => inst = inst.tag(key, value),
                [(_, "matrix"), (_, name)] => {
                    let m = reader.read_matrix()?;
                    inst = inst.matrix(name, m);
                }
                [(_, kind @ ("row" | "col")), (_, name)] => {
                    let m = reader.read_matrix()?;
                    let orientation = if kind == "row" { Orientation::Row } else { Orientation::Column };
                    let fits = match orientation {
                        Orientation::Row => m.rows() == 1,
                        Orientation::Column => m.cols() == 1,
                    };
                    if !fits {
                        return Err(TropError::parse(no, 1, format!("`{name}` is not a {kind} vector")));
                    }
                    inst = inst.vector(name, TropVector::new(m.entries().to_vec(), orientation));
                }
                [(_, "scalar"), (_, name), (col, value)] => {
                    let s = value.parse().map_err(|m: String| TropError::parse(no, col, m))?;
                    inst = inst.scalar(name, s);
                }
                _ => {
                    return Err(TropError::parse(
                        no,
                        1,
                        "expected `tag k v`, `matrix NAME`, `row NAME`, `col NAME` or `scalar NAME VALUE`",
                    ))
                }
            }
        }
        Ok(inst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let inst = Instance::new("P9")
            .tag("clause", "variant")
            .matrix("A", TropMatrix::parse_rows("0 -inf; 1/2 inf").unwrap())
            .vector("x", TropVector::column(vec![TropScalar::int(3)]))
            .vector(
                "y",
                TropVector::row(vec![TropScalar::NegInf, TropScalar::int(1)]),
            )
            .scalar("l", TropScalar::ratio(-7, 3));
        let text = inst.to_string();
        assert_eq!(text.parse::<Instance>().unwrap(), inst);
        assert!(text.starts_with("property P9\ntag clause variant\nmatrix A\n2 2\n"));
    }

    #[test]
    fn rejects_malformed() {
        assert!("matrix A\n1 1\n0\n".parse::<Instance>().is_err());
        assert!("property P1\nrow x\n2 1\n0\n0\n"
            .parse::<Instance>()
            .is_err());
        assert!("property P1\nscalar l zz\n".parse::<Instance>().is_err());
    }
}
