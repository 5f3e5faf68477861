//! The atlas of deformation classes of six skew lines.
//!
//! Join rows are recomputed from coordinates on every call. The `M` and `L`
//! rows carry stored facts, which are marked as such in every rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::invariants::classify::{
    class_table, Branch, ClassId, CoarseClass, InvariantKey, ACHIRAL_JOINS, CHIRAL_JOINS,
};
use crate::invariants::{is_homogeneous, multiset_string, pentagram_spectrum, Pentagram, SignatureSpectrum};
use crate::joins::{build_join, canonical_coarse, is_irreducible_join, mirror_perm, Perm};

/// Marker attached to stored facts.
pub const STORED: &str = "[stored fact]";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "source", content = "value")]
pub enum Irreducible {
    Computed(bool),
    Stored(bool),
}

impl Irreducible {
    pub fn value(self) -> bool {
        match self {
            Irreducible::Computed(b) | Irreducible::Stored(b) => b,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Chirality {
    Chiral,
    /// The mirror join lies in the same cyclic orbit.
    Achiral,
    StoredAchiral,
}

#[derive(Clone, Debug, Serialize)]
pub struct AtlasRow {
    pub class: ClassId,
    /// A join permutation, or the class name for `M` and `L`.
    pub representative: String,
    pub signature: i32,
    pub spectrum: SignatureSpectrum,
    pub coarse_spectrum: Vec<i32>,
    pub pentagrams: Vec<Pentagram>,
    pub homogeneous: bool,
    pub irreducible: Irreducible,
    pub chirality: Chirality,
    /// Names of fields that are stored rather than computed.
    pub stored: Vec<&'static str>,
}

impl AtlasRow {
    pub fn coarse_label(&self) -> String {
        self.class.coarse.to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CollisionKind {
    /// Same signature and spectrum.
    InvariantKey,
    /// Same spectrum, signatures ignored.
    Spectrum,
    /// Same coarse spectrum across different coarse classes.
    CoarseSpectrum,
}

#[derive(Clone, Debug, Serialize)]
pub struct Collision {
    pub kind: CollisionKind,
    pub value: String,
    pub classes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Atlas {
    pub rows: Vec<AtlasRow>,
    pub coarse_classes: Vec<String>,
    pub homogeneous_coarse_classes: Vec<String>,
    pub collisions: Vec<Collision>,
    /// Spectra carried only by non-join classes.
    pub unshared_spectra: Vec<String>,
}

fn join_row(rep: &str, branch: Branch) -> AtlasRow {
    let named: Perm = rep.parse().expect("valid representative");
    let sigma = if branch == Branch::Minus {
        mirror_perm(&named)
    } else {
        named.clone()
    };
    let c = build_join(&sigma);
    let key = InvariantKey::of(&c);
    let class = ClassId::join(rep, branch);
    let row = class_table().row(&key).expect("join keys are tabulated");
    let irreducible = row.orbits.iter().all(is_irreducible_join);
    let chirality = match branch {
        Branch::Achiral => {
            if row
                .orbits
                .iter()
                .any(|p| canonical_coarse(&mirror_perm(p)).canonical == *p)
            {
                Chirality::Achiral
            } else {
                Chirality::StoredAchiral
            }
        }
        _ => {
            let mirror_key = InvariantKey::of(&build_join(&mirror_perm(&sigma)));
            assert_ne!(key, mirror_key, "chiral classes are separated by their invariants");
            Chirality::Chiral
        }
    };
    AtlasRow {
        stored: if chirality == Chirality::StoredAchiral {
            vec!["chirality"]
        } else {
            vec![]
        },
        representative: sigma.to_string(),
        signature: key.signature,
        coarse_spectrum: key.spectrum.coarse(),
        spectrum: key.spectrum,
        pentagrams: pentagram_spectrum(&c).expect("six lines"),
        homogeneous: is_homogeneous(&c).expect("six lines"),
        irreducible: Irreducible::Computed(irreducible),
        chirality,
        class,
    }
}

fn stored_row(coarse: CoarseClass, branch: Branch, key: InvariantKey) -> AtlasRow {
    let class = ClassId { coarse, branch };
    let coarse_spectrum = key.spectrum.coarse();
    let mut pentagrams: Vec<Pentagram> = coarse_spectrum
        .iter()
        .map(|&s| Pentagram::from_abs_signature(s).expect("5-line signature"))
        .collect();
    pentagrams.sort();
    AtlasRow {
        representative: class.label(),
        signature: key.signature,
        homogeneous: coarse_spectrum.windows(2).all(|w| w[0] == w[1]),
        coarse_spectrum,
        spectrum: key.spectrum,
        pentagrams,
        irreducible: Irreducible::Stored(true),
        chirality: Chirality::Chiral,
        stored: vec!["signature", "spectrum", "irreducible", "chirality"],
        class,
    }
}

fn key_of_class(class: &ClassId) -> InvariantKey {
    class_table()
        .rows
        .iter()
        .find(|r| r.classes.contains(class))
        .map(|r| r.key.clone())
        .expect("class is tabulated")
}

fn collisions(rows: &[AtlasRow]) -> Vec<Collision> {
    let mut out = Vec::new();
    let mut group = |kind: CollisionKind, keyed: Vec<(String, String, String)>| {
        // (value, coarse label, class label)
        let mut map: BTreeMap<String, Vec<(String, String)>> = BTreeMap::new();
        for (v, coarse, label) in keyed {
            map.entry(v).or_default().push((coarse, label));
        }
        for (value, members) in map {
            let mut coarse: Vec<&String> = members.iter().map(|m| &m.0).collect();
            coarse.sort();
            coarse.dedup();
            let distinct = if kind == CollisionKind::CoarseSpectrum {
                coarse.len()
            } else {
                members.len()
            };
            if distinct > 1 {
                let mut classes: Vec<String> = if kind == CollisionKind::CoarseSpectrum {
                    coarse.into_iter().cloned().collect()
                } else {
                    members.into_iter().map(|m| m.1).collect()
                };
                classes.dedup();
                out.push(Collision {
                    kind: kind.clone(),
                    value,
                    classes,
                });
            }
        }
    };
    let labels = |r: &AtlasRow| (r.coarse_label(), r.class.label());
    group(
        CollisionKind::InvariantKey,
        rows.iter()
            .filter(|r| r.class.branch != Branch::Minus || !matches!(r.class.coarse, CoarseClass::M))
            .map(|r| (format!("sgn {} {}", r.signature, r.spectrum), labels(r).0, labels(r).1))
            .collect(),
    );
    group(
        CollisionKind::Spectrum,
        rows.iter()
            .filter(|r| r.class.branch != Branch::Minus || !matches!(r.class.coarse, CoarseClass::M))
            .map(|r| (r.spectrum.to_string(), labels(r).0, labels(r).1))
            .collect(),
    );
    group(
        CollisionKind::CoarseSpectrum,
        rows.iter()
            .map(|r| {
                (
                    format!("{{{}}}", multiset_string(&r.coarse_spectrum)),
                    labels(r).0,
                    labels(r).1,
                )
            })
            .collect(),
    );
    out
}

pub fn atlas() -> Atlas {
    let mut rows = Vec::with_capacity(19);
    for rep in CHIRAL_JOINS {
        rows.push(join_row(rep, Branch::Plus));
        rows.push(join_row(rep, Branch::Minus));
    }
    for rep in ACHIRAL_JOINS {
        rows.push(join_row(rep, Branch::Achiral));
    }
    let m_key = key_of_class(&ClassId {
        coarse: CoarseClass::M,
        branch: Branch::Undetermined,
    });
    rows.push(stored_row(CoarseClass::M, Branch::Plus, m_key.clone()));
    rows.push(stored_row(CoarseClass::M, Branch::Minus, m_key));
    for branch in [Branch::Plus, Branch::Minus] {
        let class = ClassId {
            coarse: CoarseClass::L,
            branch,
        };
        rows.push(stored_row(CoarseClass::L, branch, key_of_class(&class)));
    }

    let mut coarse_classes: Vec<String> = Vec::new();
    let mut homogeneous = Vec::new();
    for r in &rows {
        let c = r.coarse_label();
        if !coarse_classes.contains(&c) {
            if r.homogeneous {
                homogeneous.push(c.clone());
            }
            coarse_classes.push(c);
        }
    }
    let unshared_spectra = class_table()
        .rows
        .iter()
        .filter(|r| r.orbits.is_empty())
        .map(|r| format!("sgn {} {}", r.key.signature, r.key.spectrum))
        .collect();
    Atlas {
        collisions: collisions(&rows),
        rows,
        coarse_classes,
        homogeneous_coarse_classes: homogeneous,
        unshared_spectra,
    }
}

fn stored_cell(row: &AtlasRow, field: &str, text: String) -> String {
    if row.stored.contains(&field) {
        format!("{text} {STORED}")
    } else {
        text
    }
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn pentagram_multiset(p: &[Pentagram]) -> String {
    let mut groups: Vec<(Pentagram, usize)> = Vec::new();
    for &x in p {
        match groups.last_mut() {
            Some((y, k)) if *y == x => *k += 1,
            _ => groups.push((x, 1)),
        }
    }
    let parts: Vec<String> = groups
        .iter()
        .map(|&(x, k)| if k == 1 { x.to_string() } else { format!("{x}×{k}") })
        .collect();
    format!("{{{}}}", parts.join(", "))
}

impl Atlas {
    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# Deformation classes of six skew lines\n");
        let _ = writeln!(
            s,
            "| Class | Representative | Coarse class | Signature | Spectrum | Coarse spectrum | Pentagrams | Homogeneous | Irreducible | Chirality |"
        );
        let _ = writeln!(s, "|---|---|---|---|---|---|---|---|---|---|");
        for r in &self.rows {
            let chirality = match r.chirality {
                Chirality::Chiral => "chiral".to_string(),
                Chirality::Achiral => "achiral".to_string(),
                Chirality::StoredAchiral => "achiral".to_string(),
            };
            let _ = writeln!(
                s,
                "| {} | {} | {} | {} | {} | {{{}}} | {} | {} | {} | {} |",
                r.class.label(),
                r.representative,
                r.coarse_label(),
                stored_cell(r, "signature", r.signature.to_string()),
                stored_cell(r, "spectrum", r.spectrum.to_string()),
                multiset_string(&r.coarse_spectrum),
                pentagram_multiset(&r.pentagrams),
                yes_no(r.homogeneous),
                stored_cell(r, "irreducible", yes_no(r.irreducible.value())),
                stored_cell(r, "chirality", chirality),
            );
        }
        let _ = writeln!(
            s,
            "\n{} classes, {} coarse classes.\n",
            self.rows.len(),
            self.coarse_classes.len()
        );
        let _ = writeln!(
            s,
            "Homogeneous coarse classes ({}): {}\n",
            self.homogeneous_coarse_classes.len(),
            self.homogeneous_coarse_classes.join(", ")
        );
        let _ = writeln!(s, "## Spectrum collisions\n");
        for c in &self.collisions {
            let kind = match c.kind {
                CollisionKind::InvariantKey => "signature and spectrum",
                CollisionKind::Spectrum => "spectrum",
                CollisionKind::CoarseSpectrum => "coarse spectrum",
            };
            let _ = writeln!(s, "- {kind} `{}`: {}", c.value, c.classes.join(", "));
        }
        for u in &self.unshared_spectra {
            let _ = writeln!(s, "- `{u}` is realized by no join");
        }
        let _ = writeln!(
            s,
            "\nEntries marked {STORED} are imported classification facts, not computed."
        );
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("atlas serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nineteen_rows() {
        let a = atlas();
        assert_eq!(a.rows.len(), 19);
        assert_eq!(a.coarse_classes.len(), 11);
        assert_eq!(a.homogeneous_coarse_classes.len(), 5);
        let irreducible: Vec<&String> = a
            .rows
            .iter()
            .filter(|r| matches!(r.irreducible, Irreducible::Computed(true)))
            .map(|r| &r.representative)
            .collect();
        assert_eq!(irreducible, ["135264"]);
        assert_eq!(a.to_markdown(), atlas().to_markdown());
    }
}
