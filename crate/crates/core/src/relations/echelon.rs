//! Reduced row echelon bases of word polynomials over Q with provenance
//! tracking, so that membership answers come with exact coordinates in the
//! generators that were inserted.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{Word, WordPoly, Q};

#[derive(Clone, Debug)]
pub struct Generator {
    pub label: String,
    pub poly: WordPoly,
}

/// Sparse combination of generator ids.
type Combination = BTreeMap<usize, Q>;

fn add_scaled_combination(acc: &mut Combination, other: &Combination, c: &Q) {
    for (id, a) in other {
        let entry = acc.entry(*id).or_insert_with(Q::zero);
        *entry += a * c;
        if entry.is_zero() {
            acc.remove(id);
        }
    }
}

#[derive(Clone, Debug)]
struct Row {
    poly: WordPoly,
    pivot: Word,
    provenance: Combination,
}

/// Rows in reduced echelon form over a single weight grade. The pivot of a
/// row is its largest word, has coefficient 1 and occurs in no other row;
/// rows are kept sorted by pivot.
#[derive(Clone, Debug)]
pub struct RowBasis {
    weight: usize,
    rows: Vec<Row>,
    generators: Vec<Generator>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coordinate {
    pub generator: usize,
    pub label: String,
    #[serde(serialize_with = "crate::relations::serialize_q")]
    pub coeff: Q,
}

#[derive(Clone, Debug, Serialize)]
pub struct MembershipCertificate {
    pub member: bool,
    /// Present when `member`: the query as a combination of generators.
    pub coordinates: Vec<Coordinate>,
    /// Present when not `member`: the nonzero remainder after reduction.
    #[serde(serialize_with = "crate::relations::serialize_poly_opt")]
    pub residual: Option<WordPoly>,
}

impl MembershipCertificate {
    /// Re-evaluates the coordinates against the basis generators.
    pub fn verify(&self, basis: &RowBasis, query: &WordPoly) -> bool {
        if !self.member {
            return false;
        }
        let mut acc = WordPoly::zero();
        for c in &self.coordinates {
            match basis.generators.get(c.generator) {
                Some(g) => acc.add_scaled(&g.poly, &c.coeff),
                None => return false,
            }
        }
        &acc == query
    }
}

impl RowBasis {
    pub fn new(weight: usize) -> RowBasis {
        RowBasis {
            weight,
            rows: Vec::new(),
            generators: Vec::new(),
        }
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &WordPoly> {
        self.rows.iter().map(|r| &r.poly)
    }

    /// Pivot words, strictly increasing.
    pub fn pivots(&self) -> Vec<Word> {
        self.rows.iter().map(|r| r.pivot).collect()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    fn check_weight(&self, p: &WordPoly) -> Result<()> {
        if p.is_zero() || p.homogeneous_weight() == Some(self.weight) {
            Ok(())
        } else {
            Err(Error::WeightMismatch {
                expected: self.weight,
                found: match p.homogeneous_weight() {
                    Some(w) => w.to_string(),
                    None => "inhomogeneous".into(),
                },
            })
        }
    }

    /// Eliminates all pivots from `v`, tracking the subtracted rows in `prov`.
    fn reduce(&self, v: &mut WordPoly, prov: &mut Combination) {
        for row in &self.rows {
            let c = v.coeff(&row.pivot);
            if !c.is_zero() {
                v.add_scaled(&row.poly, &-&c);
                add_scaled_combination(prov, &row.provenance, &-&c);
            }
        }
    }

    /// Adds a generator; returns true when it enlarged the span.
    pub fn insert(&mut self, label: impl Into<String>, poly: WordPoly) -> Result<bool> {
        self.check_weight(&poly)?;
        let id = self.generators.len();
        self.generators.push(Generator {
            label: label.into(),
            poly: poly.clone(),
        });
        let mut v = poly;
        let mut prov = Combination::new();
        prov.insert(id, Q::one());
        self.reduce(&mut v, &mut prov);
        let Some((&pivot, lead)) = v.leading_term() else {
            return Ok(false);
        };
        let inv = lead.recip();
        let v = v.scale(&inv);
        let prov: Combination = prov.into_iter().map(|(k, c)| (k, c * &inv)).collect();
        for row in &mut self.rows {
            let c = row.poly.coeff(&pivot);
            if !c.is_zero() {
                row.poly.add_scaled(&v, &-&c);
                add_scaled_combination(&mut row.provenance, &prov, &-&c);
            }
        }
        let at = self.rows.partition_point(|r| r.pivot < pivot);
        self.rows.insert(
            at,
            Row {
                poly: v,
                pivot,
                provenance: prov,
            },
        );
        Ok(true)
    }

    /// Reduces `p` against the rows. A member comes back with coordinates
    /// in the generators; a non-member with its reduced remainder.
    pub fn member(&self, p: &WordPoly) -> Result<MembershipCertificate> {
        self.check_weight(p)?;
        let mut v = p.clone();
        let mut prov = Combination::new();
        self.reduce(&mut v, &mut prov);
        if !v.is_zero() {
            return Ok(MembershipCertificate {
                member: false,
                coordinates: Vec::new(),
                residual: Some(v),
            });
        }
        // p - sum(prov) = 0, so p = -prov
        let coordinates = prov
            .into_iter()
            .map(|(id, c)| Coordinate {
                generator: id,
                label: self.generators[id].label.clone(),
                coeff: -c,
            })
            .collect();
        Ok(MembershipCertificate {
            member: true,
            coordinates,
            residual: None,
        })
    }

    pub fn contains(&self, p: &WordPoly) -> Result<bool> {
        Ok(self.member(p)?.member)
    }

    /// Every row of `self` lies in `other`.
    pub fn is_subspace_of(&self, other: &RowBasis) -> Result<bool> {
        for row in &self.rows {
            if !other.contains(&row.poly)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
