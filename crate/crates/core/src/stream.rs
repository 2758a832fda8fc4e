//! Link streams: validated, chronologically sorted sets of temporal links.
//!
//! Vertices carry arbitrary string labels externally and dense `u32` ids
//! internally. Ids are assigned canonically: records are ordered by
//! `(b, e, lesser label, greater label)` and labels are numbered in order of
//! first appearance in that sequence. The id assignment therefore depends only
//! on the set of links, which makes text serialization round-trip exactly.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::time::{merge_intervals, Interval, Tick, Time};

pub type VertexId = u32;

/// One temporal link `(b, e, u, v)`, stored with `u <= v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Link<T = Tick> {
    pub b: T,
    pub e: T,
    pub u: VertexId,
    pub v: VertexId,
}

impl<T: Time> Link<T> {
    pub fn new(b: T, e: T, u: VertexId, v: VertexId) -> Self {
        Link {
            b,
            e,
            u: u.min(v),
            v: u.max(v),
        }
    }

    pub fn pair(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    /// `None` when `e < b`.
    pub fn interval(&self) -> Option<Interval<T>> {
        Interval::try_new(self.b, self.e)
    }
}

/// A link whose endpoints are still external labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledLink<T> {
    pub b: T,
    pub e: T,
    pub u: String,
    pub v: String,
}

/// Input format of a text link stream.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    /// `b e u v` per line.
    Durational,
    /// `t u v` per line; requires a duration to build links.
    Instantaneous,
}

/// A broken link-stream invariant. Indices refer to positions in
/// [`LinkStream::links`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    SelfLoop { link: usize },
    EndBeforeBegin { link: usize },
    Overlap { first: usize, second: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkStream<T = Tick> {
    links: Vec<Link<T>>,
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
}

impl<T: Time> Default for LinkStream<T> {
    fn default() -> Self {
        LinkStream {
            links: Vec::new(),
            labels: Vec::new(),
            index: HashMap::new(),
        }
    }
}

impl<T: Time> LinkStream<T> {
    /// Builds a stream over vertex ids `0..n`, labelled by their decimal id.
    /// Links are sorted but not validated.
    pub fn from_links(links: impl IntoIterator<Item = Link<T>>) -> Self {
        let mut links: Vec<Link<T>> = links
            .into_iter()
            .map(|l| Link::new(l.b, l.e, l.u, l.v))
            .collect();
        links.sort_unstable();
        let n = links.iter().map(|l| l.v + 1).max().unwrap_or(0);
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i as VertexId))
            .collect();
        LinkStream {
            links,
            labels,
            index,
        }
    }

    /// Canonical construction from labelled records. Not validated.
    pub fn from_labeled(records: Vec<LabeledLink<T>>) -> Self {
        Self::from_labeled_with_origin(records).0
    }

    /// Like [`LinkStream::from_labeled`], also returning for every stored
    /// link the position of the record it came from.
    fn from_labeled_with_origin(records: Vec<LabeledLink<T>>) -> (Self, Vec<usize>) {
        let mut order: Vec<usize> = (0..records.len()).collect();
        order.sort_by(|&i, &j| {
            let (a, b) = (&records[i], &records[j]);
            let ka = (a.b, a.e, a.u.as_str().min(&a.v), a.u.as_str().max(&a.v));
            let kb = (b.b, b.e, b.u.as_str().min(&b.v), b.u.as_str().max(&b.v));
            ka.cmp(&kb)
        });

        let mut labels = Vec::new();
        let mut index: HashMap<String, VertexId> = HashMap::new();
        let mut intern = |label: &str| -> VertexId {
            if let Some(&id) = index.get(label) {
                return id;
            }
            let id = labels.len() as VertexId;
            labels.push(label.to_owned());
            index.insert(label.to_owned(), id);
            id
        };

        let mut tagged: Vec<(Link<T>, usize)> = order
            .iter()
            .map(|&i| {
                let r = &records[i];
                let (lo, hi) = if r.u <= r.v { (&r.u, &r.v) } else { (&r.v, &r.u) };
                let u = intern(lo);
                let v = intern(hi);
                (Link::new(r.b, r.e, u, v), i)
            })
            .collect();
        tagged.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));

        let (links, origin) = tagged.into_iter().unzip();
        (
            LinkStream {
                links,
                labels,
                index,
            },
            origin,
        )
    }

    pub fn links(&self) -> &[Link<T>] {
        &self.links
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v as usize]
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    /// `[min b, max e]`, or `None` for an empty stream.
    pub fn span(&self) -> Option<Interval<T>> {
        let t0 = self.links.first()?.b;
        let t1 = self.links.iter().map(|l| l.e).max()?;
        Interval::try_new(t0, t1.max(t0))
    }

    /// Reports every broken invariant. An empty list means the stream is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut violations = Vec::new();
        let mut last_on_pair: HashMap<(VertexId, VertexId), usize> = HashMap::new();
        for (i, link) in self.links.iter().enumerate() {
            if link.u == link.v {
                violations.push(Violation::SelfLoop { link: i });
            }
            if link.e < link.b {
                violations.push(Violation::EndBeforeBegin { link: i });
                continue;
            }
            // links are sorted by b, so it suffices to compare against the
            // earlier link on the pair that reaches furthest in time
            match last_on_pair.get_mut(&link.pair()) {
                Some(prev) => {
                    if link.b <= self.links[*prev].e {
                        violations.push(Violation::Overlap {
                            first: *prev,
                            second: i,
                        });
                    }
                    if link.e > self.links[*prev].e {
                        *prev = i;
                    }
                }
                None => {
                    last_on_pair.insert(link.pair(), i);
                }
            }
        }
        violations
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Writes the stream in the durational text format, one `b e u v` line per
    /// link, using external labels.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.links.len() * 16);
        for l in &self.links {
            let _ = writeln!(out, "{} {} {} {}", l.b, l.e, self.label(l.u), self.label(l.v));
        }
        out
    }

    /// Largest number of distinct neighbours any vertex has at a single
    /// instant.
    pub fn max_instantaneous_degree(&self) -> usize {
        // (time, kind, link) with starts (kind 0) before ends (kind 1) so that
        // closed intervals touching at one instant are counted together
        let mut events: Vec<(T, u8, usize)> = Vec::with_capacity(self.links.len() * 2);
        for (i, l) in self.links.iter().enumerate() {
            events.push((l.b, 0, i));
            events.push((l.e, 1, i));
        }
        events.sort_unstable();
        let mut degree = vec![0usize; self.vertex_count()];
        let mut best = 0;
        for (_, kind, i) in events {
            let l = &self.links[i];
            if kind == 0 {
                degree[l.u as usize] += 1;
                degree[l.v as usize] += 1;
                best = best.max(degree[l.u as usize]).max(degree[l.v as usize]);
            } else {
                degree[l.u as usize] -= 1;
                degree[l.v as usize] -= 1;
            }
        }
        best
    }
}

fn violation_to_error<T: Time>(
    stream: &LinkStream<T>,
    origin: &[usize],
    line_of: impl Fn(usize) -> usize,
    v: &Violation,
) -> Error {
    match *v {
        Violation::SelfLoop { link } => Error::SelfLoop {
            line: line_of(origin[link]),
            label: stream.label(stream.links[link].u).to_owned(),
        },
        Violation::EndBeforeBegin { link } => Error::EndBeforeBegin {
            line: line_of(origin[link]),
        },
        Violation::Overlap { first, second } => {
            let (a, b) = (line_of(origin[first]), line_of(origin[second]));
            let l = &stream.links[first];
            Error::OverlappingLinks {
                first: a.min(b),
                second: a.max(b),
                u: stream.label(l.u).to_owned(),
                v: stream.label(l.v).to_owned(),
            }
        }
    }
}

/// Splits a text source into `(line number, fields)` for every non-blank,
/// non-comment line.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

fn parse_time<T: Time>(field: &str, line: usize) -> Result<T> {
    field.parse().map_err(|_| Error::Malformed {
        line,
        message: format!("cannot parse time {field:?}"),
    })
}

/// Parses a durational `b e u v` text stream and validates it.
pub fn parse_durational<T: Time>(text: &str) -> Result<LinkStream<T>> {
    let mut raw = Vec::new();
    let mut lines = Vec::new();
    for (line, fields) in records(text) {
        if fields.len() != 4 {
            return Err(Error::Malformed {
                line,
                message: format!("expected 4 fields `b e u v`, found {}", fields.len()),
            });
        }
        let b: T = parse_time(fields[0], line)?;
        let e: T = parse_time(fields[1], line)?;
        if e < b {
            return Err(Error::EndBeforeBegin { line });
        }
        if fields[2] == fields[3] {
            return Err(Error::SelfLoop {
                line,
                label: fields[2].to_owned(),
            });
        }
        raw.push(LabeledLink {
            b,
            e,
            u: fields[2].to_owned(),
            v: fields[3].to_owned(),
        });
        lines.push(line);
    }
    let (stream, origin) = LinkStream::from_labeled_with_origin(raw);
    if let Some(v) = stream.validate().first() {
        return Err(violation_to_error(&stream, &origin, |i| lines[i], v));
    }
    Ok(stream)
}

/// Parses an instantaneous `t u v` text stream into labelled instants.
pub fn parse_instants<T: Time>(text: &str) -> Result<Vec<(T, String, String)>> {
    let mut instants = Vec::new();
    for (line, fields) in records(text) {
        if fields.len() != 3 {
            return Err(Error::Malformed {
                line,
                message: format!("expected 3 fields `t u v`, found {}", fields.len()),
            });
        }
        let t: T = parse_time(fields[0], line)?;
        if fields[1] == fields[2] {
            return Err(Error::SelfLoop {
                line,
                label: fields[1].to_owned(),
            });
        }
        instants.push((t, fields[1].to_owned(), fields[2].to_owned()));
    }
    Ok(instants)
}

/// Parses a text stream in either format. `delta` is required for
/// [`Format::Instantaneous`] and ignored otherwise.
pub fn parse_links<T: Time>(text: &str, format: Format, delta: Option<T>) -> Result<LinkStream<T>> {
    match format {
        Format::Durational => parse_durational(text),
        Format::Instantaneous => {
            let delta = delta.ok_or_else(|| {
                Error::Invalid("the instantaneous format needs a link duration".into())
            })?;
            apply_delta(&parse_instants::<T>(text)?, delta)
        }
    }
}

/// Turns instantaneous interactions `(t, u, v)` into links `(t, t + delta, u, v)`.
///
/// Links on the same pair whose intervals overlap or touch are merged into a
/// single link over their union, so the result always satisfies the
/// disjointness invariant.
pub fn apply_delta<T: Time, L: AsRef<str>>(instants: &[(T, L, L)], delta: T) -> Result<LinkStream<T>> {
    if !delta.is_positive() {
        return Err(Error::NonPositiveDelta(delta.to_string()));
    }
    let mut by_pair: HashMap<(&str, &str), Vec<Interval<T>>> = HashMap::new();
    for (pos, (t, u, v)) in instants.iter().enumerate() {
        let (u, v) = (u.as_ref(), v.as_ref());
        if u == v {
            return Err(Error::SelfLoop {
                line: pos + 1,
                label: u.to_owned(),
            });
        }
        let end = t
            .checked_add(delta)
            .ok_or_else(|| Error::TimeOverflow(t.to_string()))?;
        by_pair
            .entry((u.min(v), u.max(v)))
            .or_default()
            .push(Interval::new(*t, end));
    }
    let records = by_pair
        .into_iter()
        .flat_map(|((u, v), intervals)| {
            merge_intervals(intervals).into_iter().map(move |iv| LabeledLink {
                b: iv.t0,
                e: iv.t1,
                u: u.to_owned(),
                v: v.to_owned(),
            })
        })
        .collect();
    Ok(LinkStream::from_labeled(records))
}
