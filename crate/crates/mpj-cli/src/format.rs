//! On-disk JSON formats: algebra definition files and machine reports.
//! Structure constants are sparse in files (nonzero terms only, rationals
//! as "p/q" strings) and dense in memory.

use mpj_core::algebra::Entry;
use mpj_core::families::Generated;
use mpj_core::rational::{format_rat, parse_rat};
use mpj_core::{AlgebraSpec, QVec, Subspace};
use serde::{Deserialize, Serialize};

#[derive(Clone, Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    /// Bracket constants, i < j only (the mirror follows by antisymmetry).
    pub bracket: Vec<ProductEntry>,
    /// Jordan constants, i <= j only.
    pub jordan: Vec<ProductEntry>,
    /// Basis of the maximal abelian subalgebra, as coordinate vectors.
    pub masa: Vec<Vec<String>>,
}

#[derive(Clone, Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct ProductEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<Term>,
}

#[derive(Clone, Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct Term {
    pub k: usize,
    pub c: String,
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<AlgebraFile, String> {
        serde_json::from_str(text).map_err(|e| format!("invalid algebra file: {e}"))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("algebra files always serialize")
    }

    /// Validates and converts into the in-memory algebra plus its MASA.
    pub fn to_algebra(&self) -> Result<(AlgebraSpec, Subspace), String> {
        let entries = |list: &[ProductEntry]| -> Result<Vec<Entry>, String> {
            let mut out = Vec::new();
            for e in list {
                for t in &e.terms {
                    let c = parse_rat(&t.c)?;
                    out.push((e.i, e.j, t.k, c));
                }
            }
            Ok(out)
        };
        let algebra = AlgebraSpec::from_entries(
            self.dim,
            self.basis.clone(),
            &entries(&self.bracket)?,
            &entries(&self.jordan)?,
        )
        .map_err(|e| e.to_string())?;
        if self.masa.is_empty() {
            return Err("masa must contain at least one vector".to_string());
        }
        let mut rows = Vec::new();
        for (idx, v) in self.masa.iter().enumerate() {
            if v.len() != self.dim {
                return Err(format!(
                    "masa vector {idx} has {} coordinates, expected {}",
                    v.len(),
                    self.dim
                ));
            }
            let coords = v.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>, _>>()?;
            rows.push(QVec { coords });
        }
        let masa = Subspace::span(&rows, self.dim);
        if masa.dim() != self.masa.len() {
            return Err("masa vectors are linearly dependent".to_string());
        }
        Ok((algebra, masa))
    }

    pub fn from_generated(g: &Generated) -> AlgebraFile {
        Self::from_parts(&g.name, &g.algebra, &g.masa)
    }

    pub fn from_parts(name: &str, a: &AlgebraSpec, masa: &Subspace) -> AlgebraFile {
        let n = a.dim();
        let sparse = |tensor: &mpj_core::Tensor3, lower: bool| -> Vec<ProductEntry> {
            let mut out = Vec::new();
            for i in 0..n {
                let j_start = if lower { i } else { i + 1 };
                for j in j_start..n {
                    let terms: Vec<Term> = (0..n)
                        .filter(|&k| !num_is_zero(tensor.get(i, j, k)))
                        .map(|k| Term { k, c: format_rat(tensor.get(i, j, k)) })
                        .collect();
                    if !terms.is_empty() {
                        out.push(ProductEntry { i, j, terms });
                    }
                }
            }
            out
        };
        AlgebraFile {
            name: name.to_string(),
            dim: n,
            basis: a.basis_names().to_vec(),
            bracket: sparse(a.bracket_constants(), false),
            jordan: sparse(a.jordan_constants(), true),
            masa: masa
                .basis()
                .iter()
                .map(|v| v.coords.iter().map(format_rat).collect())
                .collect(),
        }
    }
}

fn num_is_zero(r: &mpj_core::Rat) -> bool {
    mpj_core::rational::is_zero(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mpj_core::families::{generate, Family};

    #[test]
    fn generated_files_round_trip() {
        for fam in [Family::LieSl2, Family::MalcevM7, Family::Abelian(3)] {
            let g = generate(fam).unwrap();
            let file = AlgebraFile::from_generated(&g);
            let reparsed = AlgebraFile::parse(&file.to_json()).unwrap();
            assert_eq!(file, reparsed);
            let (a, masa) = reparsed.to_algebra().unwrap();
            assert_eq!(&a, &g.algebra);
            assert_eq!(&masa, &g.masa);
        }
    }

    #[test]
    fn bad_inputs_are_rejected() {
        assert!(AlgebraFile::parse("not json").is_err());
        let g = generate(Family::LieSl2).unwrap();
        let mut file = AlgebraFile::from_generated(&g);
        file.masa.push(file.masa[0].clone()); // dependent masa
        assert!(file.to_algebra().unwrap_err().contains("dependent"));
        let mut file = AlgebraFile::from_generated(&g);
        file.bracket[0].i = 5; // out of range
        assert!(file.to_algebra().is_err());
        let mut file = AlgebraFile::from_generated(&g);
        file.bracket[0].terms[0].c = "1/0".into();
        assert!(file.to_algebra().is_err());
        let mut file = AlgebraFile::from_generated(&g);
        file.masa.clear();
        assert!(file.to_algebra().is_err());
    }
}
