//! Plain-text group corpora and built-in group families.
//!
//! ```text
//! group <order> <index> <name>
//! degree <d>
//! gen <d space-separated 1-based images>
//! end
//! ```
//!
//! One `gen` line per generator. Blank lines and lines starting with `#` are
//! ignored.

mod families;
mod gf;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

pub use families::{builtin_families, verify_witness_properties, FamilySpec, WitnessReport};

use crate::error::{CorpusError, GroupError};
use crate::group::{FiniteGroup, Permutation};

/// How a group in a run was obtained. Library ids sort before family specs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupLabel {
    Library { order: usize, index: usize },
    Family(String),
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::Library { order, index } => write!(f, "{order}:{index}"),
            GroupLabel::Family(spec) => f.write_str(spec),
        }
    }
}

impl FromStr for GroupLabel {
    type Err = String;

    /// Parses a library id `order:index`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (o, i) = s
            .split_once(':')
            .ok_or_else(|| format!("expected order:index, got {s:?}"))?;
        let order = o.trim().parse().map_err(|_| format!("bad order in {s:?}"))?;
        let index = i.trim().parse().map_err(|_| format!("bad index in {s:?}"))?;
        Ok(GroupLabel::Library { order, index })
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub order: usize,
    pub index: usize,
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Permutation>,
    /// Line of the `group` header.
    pub line: usize,
    pub group: FiniteGroup,
}

impl CorpusEntry {
    pub fn label(&self) -> GroupLabel {
        GroupLabel::Library {
            order: self.order,
            index: self.index,
        }
    }
}

struct RawEntry {
    order: usize,
    index: usize,
    name: String,
    degree: Option<usize>,
    generators: Vec<Permutation>,
    line: usize,
}

fn syntax(line: usize, message: impl Into<String>) -> CorpusError {
    CorpusError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_int(line: usize, word: Option<&str>, what: &str) -> Result<usize, CorpusError> {
    let word = word.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    word.parse()
        .map_err(|_| syntax(line, format!("{what} is not a nonnegative integer: {word:?}")))
}

/// Parses a corpus and closes every entry's generators, rejecting entries
/// whose declared order is above `order_cap`.
pub fn parse_corpus(text: &str, order_cap: usize) -> Result<Vec<CorpusEntry>, CorpusError> {
    let mut raws: Vec<RawEntry> = Vec::new();
    let mut current: Option<RawEntry> = None;
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    for (i, raw_line) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw_line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (keyword, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
        let rest = rest.trim();
        match keyword {
            "group" => {
                if current.is_some() {
                    return Err(syntax(line, "group header before the previous entry's end"));
                }
                let mut words = rest.splitn(3, char::is_whitespace);
                let order = parse_int(line, words.next(), "order")?;
                let index = parse_int(line, words.next(), "index")?;
                let name = words.next().unwrap_or("").trim().to_string();
                if order == 0 {
                    return Err(syntax(line, "order must be positive"));
                }
                if !seen.insert((order, index)) {
                    return Err(CorpusError::DuplicateId { line, order, index });
                }
                current = Some(RawEntry {
                    order,
                    index,
                    name,
                    degree: None,
                    generators: Vec::new(),
                    line,
                });
            }
            "degree" => {
                let entry = current
                    .as_mut()
                    .ok_or_else(|| syntax(line, "degree outside a group entry"))?;
                if entry.degree.is_some() {
                    return Err(syntax(line, "degree given twice"));
                }
                let mut words = rest.split_whitespace();
                let d = parse_int(line, words.next(), "degree")?;
                if words.next().is_some() {
                    return Err(syntax(line, "trailing text after degree"));
                }
                if d == 0 {
                    return Err(syntax(line, "degree must be positive"));
                }
                entry.degree = Some(d);
            }
            "gen" => {
                let entry = current
                    .as_mut()
                    .ok_or_else(|| syntax(line, "gen outside a group entry"))?;
                let degree = entry.degree.ok_or_else(|| syntax(line, "gen before degree"))?;
                let images = rest
                    .split_whitespace()
                    .map(|w| parse_int(line, Some(w), "image"))
                    .collect::<Result<Vec<_>, _>>()?;
                if images.len() != degree {
                    return Err(syntax(
                        line,
                        format!("gen has {} images, degree is {degree}", images.len()),
                    ));
                }
                let perm = Permutation::from_images(&images).map_err(|e| syntax(line, e.to_string()))?;
                entry.generators.push(perm);
            }
            "end" => {
                let entry = current
                    .take()
                    .ok_or_else(|| syntax(line, "end without a group entry"))?;
                if entry.degree.is_none() {
                    return Err(syntax(line, "entry has no degree line"));
                }
                raws.push(entry);
            }
            other => return Err(syntax(line, format!("unknown keyword {other:?}"))),
        }
    }
    if let Some(entry) = current {
        return Err(syntax(entry.line, "entry is missing its end line"));
    }

    let built = crate::exec::map_range(raws.len(), |i| close_entry(&raws[i], order_cap));
    raws.into_iter()
        .zip(built)
        .map(|(raw, group)| {
            Ok(CorpusEntry {
                order: raw.order,
                index: raw.index,
                name: raw.name,
                degree: raw.degree.expect("checked at end"),
                generators: raw.generators,
                line: raw.line,
                group: group?,
            })
        })
        .collect()
}

fn close_entry(raw: &RawEntry, order_cap: usize) -> Result<FiniteGroup, CorpusError> {
    if raw.order > order_cap {
        return Err(CorpusError::Group(GroupError::ClosureExceedsCap { cap: order_cap }));
    }
    let degree = raw.degree.expect("checked at end");
    let mismatch = |actual: String| CorpusError::OrderMismatch {
        line: raw.line,
        order: raw.order,
        index: raw.index,
        actual,
    };
    match FiniteGroup::from_generators(degree, &raw.generators, raw.order) {
        Ok(g) if g.order() == raw.order => Ok(g),
        Ok(g) => Err(mismatch(g.order().to_string())),
        Err(GroupError::ClosureExceedsCap { .. }) => Err(mismatch(format!("more than {}", raw.order))),
        Err(e) => Err(e.into()),
    }
}

/// Writes one entry using the right regular representation on the group's
/// generators. Parsing it back yields the same Cayley table whenever the
/// group is numbered in breadth-first order from those generators, which
/// holds for everything built by [`FamilySpec::build`] and [`parse_corpus`].
pub fn write_entry(order_index: (usize, usize), name: &str, g: &FiniteGroup) -> String {
    let n = g.order();
    let mut out = format!("group {} {} {}\ndegree {}\n", order_index.0, order_index.1, name, n);
    for &s in g.generators() {
        let images: Vec<String> = g.elements().map(|x| (g.mul(x, s).index() + 1).to_string()).collect();
        out.push_str("gen ");
        out.push_str(&images.join(" "));
        out.push('\n');
    }
    out.push_str("end\n");
    out
}
