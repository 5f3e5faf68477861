//! Text formats for line and point configurations.
//!
//! ```text
//! # comment
//! field sqrt(5)
//! 1 : 0 : 0 : 0 | 0 : 1 : 0 : 0
//! ```
//!
//! A lines document holds one record per line, two points separated by `|`;
//! a points document holds one point per record. Coordinates follow the
//! field-element grammar and are separated by `:`. The optional `field`
//! header names the square roots in order; roots used in records but not
//! declared are adjoined as they appear.

use std::fmt;

use crate::error::Error;
use crate::field::{parse_element, FieldElement, FieldTower, ParseError, TowerBuilder};
use crate::planar::{PlanarPoint, SixPoints};
use crate::projgeom::{HomPoint3, OrientedLine};
use crate::Config;

#[derive(Debug, Clone, PartialEq)]
pub enum DocumentError {
    /// Malformed text.
    Parse(ParseError),
    /// Well-formed text describing an invalid object.
    Invalid { line: usize, error: Error },
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocumentError::Parse(e) => write!(f, "parse error: {e}"),
            DocumentError::Invalid { line, error } => write!(f, "line {line}: {error}"),
        }
    }
}

impl std::error::Error for DocumentError {}

impl From<ParseError> for DocumentError {
    fn from(e: ParseError) -> Self {
        DocumentError::Parse(e)
    }
}

/// A meaningful line of input: its 1-based number and the text with
/// comments stripped.
struct Record<'a> {
    number: usize,
    text: &'a str,
}

fn records(text: &str) -> impl Iterator<Item = Record<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        (!body.trim().is_empty()).then_some(Record {
            number: i + 1,
            text: body,
        })
    })
}

/// Splits `text` on `sep`, returning each piece with its 0-based char offset.
fn split_with_offsets(text: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in text.char_indices() {
        if c == sep {
            out.push((start, &text[start..i]));
            start = i + c.len_utf8();
        }
    }
    out.push((start, &text[start..]));
    out.into_iter().map(|(b, s)| (text[..b].chars().count(), s)).collect()
}

fn structural(record: &Record, message: &str) -> ParseError {
    let trimmed = record.text.trim_start();
    ParseError {
        line: record.number,
        column: record.text.chars().count() - trimmed.chars().count() + 1,
        token: trimmed.split_whitespace().next().unwrap_or("<end>").to_string(),
        message: message.to_string(),
    }
}

/// Parses `expected` coordinates separated by `:` starting at `offset`.
fn coordinates(
    record: &Record,
    offset: usize,
    text: &str,
    expected: usize,
    builder: &mut TowerBuilder,
) -> Result<Vec<FieldElement>, ParseError> {
    let parts = split_with_offsets(text, ':');
    if parts.len() != expected {
        return Err(ParseError {
            line: record.number,
            column: offset + 1,
            token: text.trim().to_string(),
            message: format!(
                "expected {expected} coordinates separated by ':', found {}",
                parts.len()
            ),
        });
    }
    parts
        .into_iter()
        .map(|(o, s)| parse_element(s, builder).map_err(|e| e.at_line(record.number).shifted(offset + o)))
        .collect()
}

/// Reads the optional header; returns the builder and whether it consumed
/// the first record.
fn header(first: Option<&Record>) -> Result<(TowerBuilder, bool), ParseError> {
    let mut builder = TowerBuilder::default();
    let Some(rec) = first else {
        return Ok((builder, false));
    };
    let trimmed = rec.text.trim_start();
    let Some(rest) = trimmed.strip_prefix("field") else {
        return Ok((builder, false));
    };
    let base = rec.text.chars().count() - rest.chars().count();
    for (o, piece) in split_with_offsets(rest, ' ') {
        if piece.trim().is_empty() {
            continue;
        }
        let x = parse_element(piece, &mut builder).map_err(|e| e.at_line(rec.number).shifted(base + o))?;
        if x.as_rational().is_some() {
            return Err(ParseError {
                line: rec.number,
                column: base + o + 1,
                token: piece.trim().to_string(),
                message: "header entries must be square roots of non-squares".into(),
            });
        }
    }
    Ok((builder, true))
}

fn lift_all(v: Vec<FieldElement>, tower: &FieldTower) -> Vec<FieldElement> {
    v.into_iter().map(|x| x.lift(tower)).collect()
}

/// Six (or any number of) oriented lines with coordinates in one tower.
#[derive(Debug, Clone)]
pub struct LinesDocument {
    pub tower: FieldTower,
    pub lines: Vec<OrientedLine>,
}

impl PartialEq for LinesDocument {
    /// Exact equality of the stored representatives.
    fn eq(&self, other: &Self) -> bool {
        self.tower == other.tower
            && self.lines.len() == other.lines.len()
            && self
                .lines
                .iter()
                .zip(&other.lines)
                .all(|(a, b)| a.a().coords() == b.a().coords() && a.b().coords() == b.b().coords())
    }
}

impl LinesDocument {
    pub fn from_config(c: &Config) -> LinesDocument {
        let tower = c.lines().iter().fold(FieldTower::rationals(), |t, l| {
            t.common(l.plucker().tower()).expect("towers")
        });
        LinesDocument {
            tower,
            lines: c.lines().to_vec(),
        }
    }

    pub fn to_config(&self) -> crate::Result<Config> {
        Config::new(self.lines.clone())
    }
}

impl fmt::Display for LinesDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tower.depth() > 0 {
            writeln!(f, "{}", self.tower)?;
        }
        for l in &self.lines {
            let a = l.a().coords().clone().map(|x| x.lift(&self.tower));
            let b = l.b().coords().clone().map(|x| x.lift(&self.tower));
            let join = |v: &[FieldElement; 4]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" : ");
            writeln!(f, "{} | {}", join(&a), join(&b))?;
        }
        Ok(())
    }
}

pub fn parse_lines6(text: &str) -> Result<LinesDocument, DocumentError> {
    let recs: Vec<Record> = records(text).collect();
    let (mut builder, skip) = header(recs.first())?;
    let mut raw = Vec::new();
    for rec in recs.iter().skip(skip as usize) {
        let halves = split_with_offsets(rec.text, '|');
        if halves.len() != 2 {
            return Err(structural(rec, "expected two points separated by '|'").into());
        }
        let a = coordinates(rec, halves[0].0, halves[0].1, 4, &mut builder)?;
        let b = coordinates(rec, halves[1].0, halves[1].1, 4, &mut builder)?;
        raw.push((rec.number, a, b));
    }
    let tower = builder.tower().clone();
    let mut lines = Vec::with_capacity(raw.len());
    for (line, a, b) in raw {
        let point = |v: Vec<FieldElement>| HomPoint3::new(lift_all(v, &tower).try_into().expect("four coordinates"));
        let l = point(a)
            .and_then(|a| Ok((a, point(b)?)))
            .and_then(|(a, b)| OrientedLine::new(a, b))
            .map_err(|error| DocumentError::Invalid { line, error })?;
        lines.push(l);
    }
    Ok(LinesDocument { tower, lines })
}

/// Planar points with coordinates in one tower.
#[derive(Debug, Clone)]
pub struct PointsDocument {
    pub tower: FieldTower,
    pub points: Vec<PlanarPoint>,
}

impl PartialEq for PointsDocument {
    fn eq(&self, other: &Self) -> bool {
        self.tower == other.tower
            && self.points.len() == other.points.len()
            && self
                .points
                .iter()
                .zip(&other.points)
                .all(|(a, b)| a.coords() == b.coords())
    }
}

impl PointsDocument {
    pub fn from_six(s: &SixPoints) -> PointsDocument {
        let tower = s
            .points()
            .iter()
            .flat_map(|p| p.coords().iter())
            .fold(FieldTower::rationals(), |t, x| t.common(x.tower()).expect("towers"));
        PointsDocument {
            tower,
            points: s.points().to_vec(),
        }
    }

    pub fn to_six(&self) -> crate::Result<SixPoints> {
        SixPoints::new(self.points.clone())
    }
}

impl fmt::Display for PointsDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tower.depth() > 0 {
            writeln!(f, "{}", self.tower)?;
        }
        for p in &self.points {
            let c: Vec<String> = p.coords().iter().map(|x| x.lift(&self.tower).to_string()).collect();
            writeln!(f, "{}", c.join(" : "))?;
        }
        Ok(())
    }
}

pub fn parse_points(text: &str) -> Result<PointsDocument, DocumentError> {
    let recs: Vec<Record> = records(text).collect();
    let (mut builder, skip) = header(recs.first())?;
    let mut raw = Vec::new();
    for rec in recs.iter().skip(skip as usize) {
        raw.push((rec.number, coordinates(rec, 0, rec.text, 3, &mut builder)?));
    }
    let tower = builder.tower().clone();
    let points = raw
        .into_iter()
        .map(|(line, v)| {
            PlanarPoint::new(lift_all(v, &tower).try_into().expect("three coordinates"))
                .map_err(|error| DocumentError::Invalid { line, error })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PointsDocument { tower, points })
}
