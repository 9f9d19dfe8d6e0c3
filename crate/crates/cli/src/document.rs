//! JSON documents for lattices, homomorphisms, dual spaces and dual
//! morphisms, and their conversion to and from the core types.
//!
//! Carriers are label lists, relations are pair lists in carrier order, and
//! partial orders are cover lists.  The quasi-orders of an Urquhart space
//! need not be antisymmetric, so they are stored as their non-reflexive
//! pairs instead.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use latdual_core::fixtures;
use latdual_core::spaces::{CgSpace, DhSpace, GvgSpace, HgSpace, PloSpace, UrqSpace};
use latdual_core::{
    Category, DualMorphism, DualSpace, Lattice, LatticeHom, Poset, Relation, Subset,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, CliResult, ParseError};

/// A lattice given by element names and cover pairs `(lower, upper)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeDocument {
    pub name: String,
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

/// A finite poset given by point names and cover pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDocument {
    pub points: Vec<String>,
    pub covers: Vec<(String, String)>,
}

/// A lattice named by a built-in fixture or given inline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LatticeRef {
    Fixture(String),
    Inline(LatticeDocument),
}

/// A homomorphism: each source element mapped to a target element name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomDocument {
    pub source: LatticeRef,
    pub target: LatticeRef,
    pub map: BTreeMap<String, String>,
}

/// A dual space of any category, tagged by its category name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "category", rename_all = "lowercase", deny_unknown_fields)]
pub enum SpaceDocument {
    Filt {
        name: String,
        elements: Vec<String>,
        covers: Vec<(String, String)>,
    },
    Cg {
        points: Vec<String>,
        subbasis: Vec<Vec<String>>,
    },
    Dh {
        x: LatticeDocument,
        y: LatticeDocument,
        relation: Vec<(String, String)>,
    },
    Gvg {
        x: PosetDocument,
        y: PosetDocument,
        relation: Vec<(String, String)>,
    },
    Hg {
        x: Vec<String>,
        y: Vec<String>,
        relation: Vec<(String, String)>,
    },
    Urq {
        points: Vec<String>,
        first_order: Vec<(String, String)>,
        second_order: Vec<(String, String)>,
    },
    Plo {
        points: Vec<String>,
        relation: Vec<(String, String)>,
    },
}

/// Any input document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Lattice(LatticeDocument),
    Hom(HomDocument),
    Space(SpaceDocument),
}

/// Finds the line of a label inside the original text, so that semantic
/// errors can be reported with a position.
struct Locator<'a> {
    text: &'a str,
}

impl Locator<'_> {
    /// Line of the first occurrence of `"needle"` after the first
    /// occurrence of the key `"after"`.
    fn line_of(&self, after: &str, needle: &str) -> Option<usize> {
        let start = self.text.find(&format!("\"{after}\"")).unwrap_or(0);
        let quoted = serde_json::to_string(needle).ok()?;
        let offset = self.text[start..].find(&quoted)? + start;
        Some(self.text[..offset].matches('\n').count() + 1)
    }

    fn error(&self, key: &str, needle: &str, field: String, message: String) -> ParseError {
        ParseError::new(message)
            .at_field(field)
            .at_line(self.line_of(key, needle))
    }
}

/// Parse any document, deciding its kind by its fields: `category` marks a
/// dual space, `map` a homomorphism, anything else a lattice.
pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let value: Value = serde_json::from_str(text).map_err(|e| ParseError::from_json(&e))?;
    let Value::Object(map) = &value else {
        return Err(ParseError::new("expected a JSON object").at_line(Some(1)));
    };
    let typed = if map.contains_key("category") {
        serde_json::from_str(text).map(Document::Space)
    } else if map.contains_key("map") {
        serde_json::from_str(text).map(Document::Hom)
    } else {
        serde_json::from_str(text).map(Document::Lattice)
    };
    typed.map_err(|e| ParseError::from_json(&e))
}

/// Parse a lattice document and build the lattice.
pub fn parse_lattice(text: &str) -> CliResult<Lattice> {
    match parse_document(text)? {
        Document::Lattice(doc) => doc.to_lattice_in(text, ""),
        _ => Err(
            ParseError::new("expected a lattice document with fields name, elements, covers")
                .into(),
        ),
    }
}

fn unique_labels(
    labels: &[String],
    loc: &Locator,
    key: &str,
    prefix: &str,
) -> Result<HashMap<String, usize>, ParseError> {
    let mut index = HashMap::new();
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(loc.error(
                key,
                l,
                format!("{prefix}{key}[{i}]"),
                format!("duplicate name `{l}`"),
            ));
        }
    }
    Ok(index)
}

/// Resolve label pairs against two index maps.
fn resolve_pairs(
    pairs: &[(String, String)],
    left: &HashMap<String, usize>,
    right: &HashMap<String, usize>,
    loc: &Locator,
    key: &str,
    prefix: &str,
) -> Result<Vec<(usize, usize)>, ParseError> {
    pairs
        .iter()
        .enumerate()
        .map(|(i, (a, b))| {
            let find = |label: &String, side: usize, index: &HashMap<String, usize>| {
                index.get(label).copied().ok_or_else(|| {
                    loc.error(
                        key,
                        label,
                        format!("{prefix}{key}[{i}][{side}]"),
                        format!("unknown name `{label}`"),
                    )
                })
            };
            Ok((find(a, 0, left)?, find(b, 1, right)?))
        })
        .collect()
}

impl LatticeDocument {
    pub fn from_lattice(l: &Lattice) -> Self {
        LatticeDocument {
            name: l.name().to_string(),
            elements: l.labels().to_vec(),
            covers: label_pairs(l.labels(), l.labels(), &l.covers()),
        }
    }

    /// Build the lattice; `prefix` is the field path of this document
    /// inside an enclosing one.
    fn to_lattice_in(&self, text: &str, prefix: &str) -> CliResult<Lattice> {
        let loc = Locator { text };
        let index = unique_labels(&self.elements, &loc, "elements", prefix)?;
        resolve_pairs(&self.covers, &index, &index, &loc, "covers", prefix)?;
        if self.elements.is_empty() {
            return Err(ParseError::new("a lattice needs at least one element")
                .at_field(format!("{prefix}elements"))
                .into());
        }
        Ok(Lattice::from_covers(
            self.name.clone(),
            &self.elements,
            &self.covers,
        )?)
    }

    pub fn to_lattice(&self) -> CliResult<Lattice> {
        self.to_lattice_in("", "")
    }
}

impl PosetDocument {
    pub fn from_poset(p: &Poset) -> Self {
        PosetDocument {
            points: p.labels().to_vec(),
            covers: label_pairs(p.labels(), p.labels(), &p.covers()),
        }
    }

    fn to_poset_in(&self, text: &str, prefix: &str) -> CliResult<Poset> {
        let loc = Locator { text };
        let index = unique_labels(&self.points, &loc, "points", prefix)?;
        let covers = resolve_pairs(&self.covers, &index, &index, &loc, "covers", prefix)?;
        Ok(Poset::from_covers(self.points.clone(), &covers)?)
    }
}

impl LatticeRef {
    fn resolve(&self, text: &str, field: &str) -> CliResult<Lattice> {
        match self {
            LatticeRef::Fixture(name) => fixtures::by_name(name).ok_or_else(|| {
                ParseError::new(format!("unknown fixture `{name}`"))
                    .at_field(field)
                    .at_line(Locator { text }.line_of(field, name))
                    .into()
            }),
            LatticeRef::Inline(doc) => doc.to_lattice_in(text, &format!("{field}.")),
        }
    }
}

impl HomDocument {
    /// Build and check the homomorphism; `text` is the original document,
    /// used for error positions.
    pub fn to_hom(&self, text: &str) -> CliResult<LatticeHom> {
        let source = self.source.resolve(text, "source")?;
        let target = self.target.resolve(text, "target")?;
        let loc = Locator { text };
        let mut table = Vec::with_capacity(source.len());
        for x in source.labels() {
            let image = self.map.get(x).ok_or_else(|| {
                ParseError::new(format!("no image given for `{x}`")).at_field(format!("map.{x}"))
            })?;
            let y = target.index_of(image).ok_or_else(|| {
                loc.error(
                    "map",
                    image,
                    format!("map.{x}"),
                    format!("`{image}` is not an element of the target"),
                )
            })?;
            table.push(y);
        }
        if let Some(extra) = self.map.keys().find(|k| source.index_of(k).is_none()) {
            return Err(loc
                .error(
                    "map",
                    extra,
                    format!("map.{extra}"),
                    format!("`{extra}` is not an element of the source"),
                )
                .into());
        }
        Ok(LatticeHom::new(Arc::new(source), Arc::new(target), table)?)
    }
}

fn label_pairs(
    left: &[String],
    right: &[String],
    pairs: &[(usize, usize)],
) -> Vec<(String, String)> {
    pairs
        .iter()
        .map(|&(a, b)| (left[a].clone(), right[b].clone()))
        .collect()
}

fn relation_pairs(left: &[String], right: &[String], r: &Relation) -> Vec<(String, String)> {
    label_pairs(left, right, &r.pairs())
}

fn subset_labels(labels: &[String], s: &Subset) -> Vec<String> {
    s.iter().map(|i| labels[i].clone()).collect()
}

impl SpaceDocument {
    pub fn category(&self) -> Category {
        match self {
            SpaceDocument::Filt { .. } => Category::Filt,
            SpaceDocument::Cg { .. } => Category::Cg,
            SpaceDocument::Dh { .. } => Category::Dh,
            SpaceDocument::Gvg { .. } => Category::Gvg,
            SpaceDocument::Hg { .. } => Category::Hg,
            SpaceDocument::Urq { .. } => Category::Urq,
            SpaceDocument::Plo { .. } => Category::Plo,
        }
    }

    pub fn from_space(space: &DualSpace) -> Self {
        match space {
            DualSpace::Filt(l) => {
                let doc = LatticeDocument::from_lattice(l);
                SpaceDocument::Filt {
                    name: doc.name,
                    elements: doc.elements,
                    covers: doc.covers,
                }
            }
            DualSpace::Cg(c) => SpaceDocument::Cg {
                points: c.labels().to_vec(),
                subbasis: c
                    .subbasis()
                    .iter()
                    .map(|u| subset_labels(c.labels(), u))
                    .collect(),
            },
            DualSpace::Dh(d) => SpaceDocument::Dh {
                x: LatticeDocument::from_lattice(d.x()),
                y: LatticeDocument::from_lattice(d.y()),
                relation: relation_pairs(d.x().labels(), d.y().labels(), d.relation()),
            },
            DualSpace::Gvg(g) => SpaceDocument::Gvg {
                x: PosetDocument::from_poset(g.x()),
                y: PosetDocument::from_poset(g.y()),
                relation: relation_pairs(g.x().labels(), g.y().labels(), g.relation()),
            },
            DualSpace::Hg(h) => SpaceDocument::Hg {
                x: h.x_labels().to_vec(),
                y: h.y_labels().to_vec(),
                relation: relation_pairs(h.x_labels(), h.y_labels(), h.relation()),
            },
            DualSpace::Urq(u) => {
                let strict = |q: &Relation| {
                    let pairs: Vec<(usize, usize)> =
                        q.pairs().into_iter().filter(|(a, b)| a != b).collect();
                    label_pairs(u.labels(), u.labels(), &pairs)
                };
                SpaceDocument::Urq {
                    points: u.labels().to_vec(),
                    first_order: strict(u.first_order()),
                    second_order: strict(u.second_order()),
                }
            }
            DualSpace::Plo(p) => SpaceDocument::Plo {
                points: p.labels().to_vec(),
                relation: relation_pairs(p.labels(), p.labels(), p.relation()),
            },
        }
    }

    /// Build the space (structure only; validation is separate).
    pub fn to_space(&self, text: &str) -> CliResult<DualSpace> {
        let loc = Locator { text };
        let relation = |pairs: &[(String, String)],
                        left: &[String],
                        right: &[String],
                        key: &str|
         -> CliResult<Relation> {
            let li = unique_labels(left, &loc, "points", "")?;
            let ri = unique_labels(right, &loc, "points", "")?;
            let resolved = resolve_pairs(pairs, &li, &ri, &loc, key, "")?;
            Ok(Relation::from_pairs(left.len(), right.len(), resolved))
        };
        Ok(match self {
            SpaceDocument::Filt {
                name,
                elements,
                covers,
            } => DualSpace::Filt(
                LatticeDocument {
                    name: name.clone(),
                    elements: elements.clone(),
                    covers: covers.clone(),
                }
                .to_lattice_in(text, "")?,
            ),
            SpaceDocument::Cg { points, subbasis } => {
                let index = unique_labels(points, &loc, "points", "")?;
                let mut sets = Vec::with_capacity(subbasis.len());
                for (i, members) in subbasis.iter().enumerate() {
                    let mut s = Subset::empty(points.len());
                    for (j, m) in members.iter().enumerate() {
                        let k = index.get(m).ok_or_else(|| {
                            loc.error(
                                "subbasis",
                                m,
                                format!("subbasis[{i}][{j}]"),
                                format!("unknown point `{m}`"),
                            )
                        })?;
                        s.insert(*k);
                    }
                    sets.push(s);
                }
                DualSpace::Cg(CgSpace::new(points.clone(), sets)?)
            }
            SpaceDocument::Dh {
                x,
                y,
                relation: pairs,
            } => {
                let (lx, ly) = (x.to_lattice_in(text, "x.")?, y.to_lattice_in(text, "y.")?);
                let r = relation(pairs, lx.labels(), ly.labels(), "relation")?;
                DualSpace::Dh(DhSpace::new(lx, ly, r)?)
            }
            SpaceDocument::Gvg {
                x,
                y,
                relation: pairs,
            } => {
                let (px, py) = (x.to_poset_in(text, "x.")?, y.to_poset_in(text, "y.")?);
                let r = relation(pairs, px.labels(), py.labels(), "relation")?;
                DualSpace::Gvg(GvgSpace::new(px, py, r)?)
            }
            SpaceDocument::Hg {
                x,
                y,
                relation: pairs,
            } => {
                let r = relation(pairs, x, y, "relation")?;
                DualSpace::Hg(HgSpace::new(x.clone(), y.clone(), r)?)
            }
            SpaceDocument::Urq {
                points,
                first_order,
                second_order,
            } => {
                let with_diagonal =
                    |pairs: &[(String, String)], key: &str| -> CliResult<Relation> {
                        let mut q = relation(pairs, points, points, key)?;
                        for z in 0..points.len() {
                            q.insert(z, z);
                        }
                        Ok(q)
                    };
                let (q1, q2) = (
                    with_diagonal(first_order, "first_order")?,
                    with_diagonal(second_order, "second_order")?,
                );
                DualSpace::Urq(UrqSpace::new(points.clone(), q1, q2)?)
            }
            SpaceDocument::Plo {
                points,
                relation: pairs,
            } => {
                let r = relation(pairs, points, points, "relation")?;
                DualSpace::Plo(PloSpace::new(points.clone(), r)?)
            }
        })
    }
}

/// Left and right carrier labels of a space.
pub fn carrier_labels(space: &DualSpace) -> (Vec<String>, Vec<String>) {
    match space {
        DualSpace::Filt(l) => (l.labels().to_vec(), l.labels().to_vec()),
        DualSpace::Cg(c) => (c.labels().to_vec(), c.labels().to_vec()),
        DualSpace::Dh(d) => (d.x().labels().to_vec(), d.y().labels().to_vec()),
        DualSpace::Gvg(g) => (g.x().labels().to_vec(), g.y().labels().to_vec()),
        DualSpace::Hg(h) => (h.x_labels().to_vec(), h.y_labels().to_vec()),
        DualSpace::Urq(u) => (u.labels().to_vec(), u.labels().to_vec()),
        DualSpace::Plo(p) => (p.labels().to_vec(), p.labels().to_vec()),
    }
}

/// A dual morphism `source → target` as a JSON value with labelled pairs.
pub fn morphism_value(m: &DualMorphism, source: &DualSpace, target: &DualSpace) -> Value {
    let (sl, sr) = carrier_labels(source);
    let (tl, tr) = carrier_labels(target);
    let map_pairs = |map: &[usize], from: &[String], to: &[String]| -> Vec<(String, String)> {
        map.iter()
            .enumerate()
            .map(|(i, &j)| (from[i].clone(), to[j].clone()))
            .collect()
    };
    let mut out = serde_json::Map::new();
    out.insert("category".into(), Value::from(m.category().name()));
    match m {
        DualMorphism::Filt(f) => {
            out.insert("map".into(), serde_json::json!(map_pairs(&f.map, &sl, &tl)));
        }
        DualMorphism::Dh(f) => {
            out.insert(
                "x_map".into(),
                serde_json::json!(map_pairs(&f.x_map, &sl, &tl)),
            );
            out.insert(
                "y_map".into(),
                serde_json::json!(map_pairs(&f.y_map, &sr, &tr)),
            );
        }
        DualMorphism::Cg(s) => {
            out.insert(
                "relation".into(),
                serde_json::json!(relation_pairs(&sl, &tl, &s.relation)),
            );
        }
        DualMorphism::Gvg(p)
        | DualMorphism::Hg(p)
        | DualMorphism::Urq(p)
        | DualMorphism::Plo(p) => {
            out.insert(
                "left".into(),
                serde_json::json!(relation_pairs(&sl, &tl, &p.left)),
            );
            out.insert(
                "right".into(),
                serde_json::json!(relation_pairs(&sr, &tr, &p.right)),
            );
        }
    }
    Value::Object(out)
}

/// Serialize a space as diff-friendly JSON text.
pub fn space_to_text(space: &DualSpace) -> String {
    let value =
        serde_json::to_value(SpaceDocument::from_space(space)).expect("documents serialize");
    crate::json::to_text(&value)
}

/// Serialize a lattice as diff-friendly JSON text.
pub fn lattice_to_text(l: &Lattice) -> String {
    let value =
        serde_json::to_value(LatticeDocument::from_lattice(l)).expect("documents serialize");
    crate::json::to_text(&value)
}

/// Parse a dual-space document.
pub fn parse_space(text: &str) -> CliResult<DualSpace> {
    match parse_document(text)? {
        Document::Space(doc) => doc.to_space(text),
        _ => Err(CliError::Parse(ParseError::new(
            "expected a dual-space document with a `category` field",
        ))),
    }
}
