//! Identification of deformation classes of six skew lines.
//!
//! The lookup table is computed from the coordinates of all 720 joins and
//! labeled by nine named join representatives. Two non-join classes, `M`
//! and `L`, enter as stored facts: `M` is the homogeneous class with
//! spectrum `{0×6}`, and `L` shares its spectrum with `J(214365)` up to
//! mirror, so those keys yield a candidate set.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{signature, signature_spectrum, SignatureSpectrum};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::joins::{build_join, canonical_coarse, mirror_perm, Perm};
use crate::planar::Kind;

/// Named representatives of the chiral coarse join classes.
pub const CHIRAL_JOINS: [&str; 6] = ["123456", "214365", "123465", "123564", "124365", "215364"];
/// Named representatives of the achiral join classes (stored fact).
pub const ACHIRAL_JOINS: [&str; 3] = ["123654", "135264", "124653"];

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoarseClass {
    Join(Perm),
    M,
    L,
}

impl fmt::Display for CoarseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoarseClass::Join(p) => write!(f, "<J({p})>"),
            CoarseClass::M => write!(f, "<M>"),
            CoarseClass::L => write!(f, "<L>"),
        }
    }
}

/// Which of the two mirror classes inside a coarse class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Branch {
    /// The class of the named representative.
    Plus,
    /// Its mirror partner.
    Minus,
    Achiral,
    /// Chiral, but no computed invariant tells the two branches apart.
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassId {
    pub coarse: CoarseClass,
    pub branch: Branch,
}

impl ClassId {
    pub fn join(rep: &str, branch: Branch) -> ClassId {
        ClassId {
            coarse: CoarseClass::Join(rep.parse().expect("valid representative")),
            branch,
        }
    }

    /// Name of the deformation class: `J(654321)` for the mirror branch of
    /// `<J(123456)>`, `M+`/`M-` for non-join branches.
    pub fn label(&self) -> String {
        match (&self.coarse, self.branch) {
            (CoarseClass::Join(p), Branch::Minus) => format!("J({})", mirror_perm(p)),
            (CoarseClass::Join(p), _) => format!("J({p})"),
            (c, b) => {
                let name = if *c == CoarseClass::M { "M" } else { "L" };
                match b {
                    Branch::Plus => format!("{name}+"),
                    Branch::Minus => format!("{name}-"),
                    _ => name.to_string(),
                }
            }
        }
    }

    pub fn is_chiral(&self) -> bool {
        self.branch != Branch::Achiral
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl Serialize for ClassId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            class: String,
            coarse: String,
            branch: Branch,
        }
        Repr {
            class: self.label(),
            coarse: self.coarse.to_string(),
            branch: self.branch,
        }
        .serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identification {
    Id(ClassId),
    /// Classes sharing every computed invariant; a first-class answer.
    Candidates(Vec<ClassId>),
}

impl Identification {
    pub fn classes(&self) -> Vec<&ClassId> {
        match self {
            Identification::Id(c) => vec![c],
            Identification::Candidates(v) => v.iter().collect(),
        }
    }
}

impl fmt::Display for Identification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.classes().iter().map(|c| c.label()).collect();
        match self {
            Identification::Id(_) => f.write_str(&names[0]),
            Identification::Candidates(_) => write!(f, "{{{}}}", names.join(", ")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct InvariantKey {
    pub signature: i32,
    pub spectrum: SignatureSpectrum,
}

impl InvariantKey {
    pub fn of(c: &Config) -> InvariantKey {
        InvariantKey {
            signature: signature(c),
            spectrum: signature_spectrum(c),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub key: InvariantKey,
    pub classes: Vec<ClassId>,
    /// Canonical two-sided cyclic orbits of joins realizing this key.
    pub orbits: Vec<Perm>,
}

impl TableRow {
    pub fn identification(&self) -> Identification {
        if self.classes.len() == 1 {
            Identification::Id(self.classes[0].clone())
        } else {
            Identification::Candidates(self.classes.clone())
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassTable {
    pub rows: Vec<TableRow>,
}

impl ClassTable {
    fn build() -> ClassTable {
        let realized: Vec<(InvariantKey, Perm)> = Perm::all(6)
            .into_par_iter()
            .map(|s| (InvariantKey::of(&build_join(&s)), canonical_coarse(&s).canonical))
            .collect();
        let mut orbits: BTreeMap<InvariantKey, BTreeSet<Perm>> = BTreeMap::new();
        for (k, p) in realized {
            orbits.entry(k).or_default().insert(p);
        }

        let key_of = |s: &Perm| InvariantKey::of(&build_join(s));
        let mut classes: BTreeMap<InvariantKey, Vec<ClassId>> = BTreeMap::new();
        for rep in CHIRAL_JOINS {
            let p: Perm = rep.parse().unwrap();
            classes
                .entry(key_of(&p))
                .or_default()
                .push(ClassId::join(rep, Branch::Plus));
            classes
                .entry(key_of(&mirror_perm(&p)))
                .or_default()
                .push(ClassId::join(rep, Branch::Minus));
        }
        for rep in ACHIRAL_JOINS {
            let p: Perm = rep.parse().unwrap();
            classes
                .entry(key_of(&p))
                .or_default()
                .push(ClassId::join(rep, Branch::Achiral));
        }
        for key in orbits.keys() {
            assert_eq!(
                classes.get(key).map(Vec::len),
                Some(1),
                "join key {key:?} must carry one label"
            );
        }

        // Stored facts for the two non-join classes.
        let m_key = InvariantKey {
            signature: 0,
            spectrum: SignatureSpectrum::from_values(vec![0; 6]),
        };
        classes.entry(m_key).or_default().push(ClassId {
            coarse: CoarseClass::M,
            branch: Branch::Undetermined,
        });
        let j = "214365".parse::<Perm>().unwrap();
        for (perm, branch) in [(mirror_perm(&j), Branch::Plus), (j, Branch::Minus)] {
            classes.entry(key_of(&perm)).or_default().push(ClassId {
                coarse: CoarseClass::L,
                branch,
            });
        }

        let mut rows: Vec<TableRow> = classes
            .into_iter()
            .map(|(key, classes)| TableRow {
                orbits: orbits
                    .get(&key)
                    .map(|s| s.iter().cloned().collect())
                    .unwrap_or_default(),
                key,
                classes,
            })
            .collect();
        rows.sort_by(|a, b| {
            b.key
                .signature
                .cmp(&a.key.signature)
                .then(a.key.spectrum.cmp(&b.key.spectrum))
        });
        ClassTable { rows }
    }

    pub fn row(&self, key: &InvariantKey) -> Option<&TableRow> {
        self.rows.iter().find(|r| &r.key == key)
    }
}

pub fn class_table() -> &'static ClassTable {
    static TABLE: OnceLock<ClassTable> = OnceLock::new();
    TABLE.get_or_init(ClassTable::build)
}

pub fn identify_key(key: &InvariantKey) -> Result<Identification> {
    class_table()
        .row(key)
        .map(TableRow::identification)
        .ok_or(Error::UnknownSpectrum)
}

pub fn identify_class(c: &Config) -> Result<Identification> {
    if c.len() != 6 {
        return Err(Error::WrongSize {
            expected: 6,
            got: c.len(),
        });
    }
    identify_key(&InvariantKey::of(c))
}

/// The coarse class reached by a Schläfli six of each kind.
pub fn theorem_target(kind: Kind) -> CoarseClass {
    match kind {
        Kind::Hexagonal => CoarseClass::Join("123456".parse().unwrap()),
        Kind::Bipartite => CoarseClass::Join("123654".parse().unwrap()),
        Kind::Tripartite => CoarseClass::Join("214365".parse().unwrap()),
        Kind::Icosahedral => CoarseClass::M,
    }
}

/// Narrows an identification to the candidate in the target class of `kind`.
pub fn resolve_for_kind(ident: &Identification, kind: Kind) -> Option<ClassId> {
    let target = theorem_target(kind);
    let hits: Vec<&ClassId> = ident.classes().into_iter().filter(|c| c.coarse == target).collect();
    match hits.as_slice() {
        [one] => Some((*one).clone()),
        _ => None,
    }
}
