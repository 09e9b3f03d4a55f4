use std::collections::BTreeMap;

use super::{faces::genus, CombinatorialMap};
use crate::error::{Error, Result};

/// Parses a planar diagram code. Accepts `X(a,b,c,d),...`, `X[a,b,c,d],...`,
/// optionally wrapped in `PD[...]`, and the nested-list form `[[a,b,c,d],...]`.
/// Position 0 is the incoming under-strand; labels run counterclockwise.
pub fn parse_pd(text: &str) -> Result<CombinatorialMap> {
    let terms = tokenize(text)?;
    if terms.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    let c = terms.len();

    let mut slots: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (k, t) in terms.iter().enumerate() {
        for (i, &label) in t.iter().enumerate() {
            slots.entry(label).or_default().push(4 * k + i);
        }
    }
    let mut alpha = vec![0; 4 * c];
    for (&label, darts) in &slots {
        match darts.as_slice() {
            &[x, y] => {
                alpha[x] = y;
                alpha[y] = x;
            }
            other => return Err(Error::LabelMultiplicity { label, count: other.len() }),
        }
    }
    if alpha.iter().enumerate().any(|(d, &e)| d == e) {
        return Err(Error::Syntax("a crossing joins a label to itself in the same slot".into()));
    }

    let map = CombinatorialMap::new(alpha, vec![true; c], None)?;
    map.ensure_knot()?;
    let map = map.oriented_from(0)?;
    for k in 0..c {
        if !map.is_incoming(4 * k)? {
            return Err(Error::Orientation(k));
        }
    }
    match genus(&map)? {
        0 => Ok(map),
        g => Err(Error::NotPlanar(g)),
    }
}

fn tokenize(text: &str) -> Result<Vec<[i64; 4]>> {
    let mut s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some(rest) = s.strip_prefix("PD") {
        s = strip_outer(rest).ok_or_else(|| Error::Syntax("unbalanced PD wrapper".into()))?.to_string();
    } else if s.starts_with("[[") || s.starts_with("[(") || s.starts_with("[X") || s == "[]" {
        s = strip_outer(&s).ok_or_else(|| Error::Syntax("unbalanced outer brackets".into()))?.to_string();
    }

    let mut out = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let body = rest.strip_prefix('X').unwrap_or(rest);
        let close = match body.chars().next() {
            Some('(') => ')',
            Some('[') => ']',
            _ => return Err(Error::Syntax(format!("expected a crossing term at `{}`", preview(rest)))),
        };
        let end = body.find(close).ok_or_else(|| Error::Syntax(format!("unterminated term `{}`", preview(rest))))?;
        let labels = body[1..end]
            .split(',')
            .map(|x| x.parse::<i64>().map_err(|_| Error::Syntax(format!("bad label `{x}`"))))
            .collect::<Result<Vec<_>>>()?;
        let term: [i64; 4] = labels
            .try_into()
            .map_err(|v: Vec<i64>| Error::Syntax(format!("crossing term has {} labels, expected 4", v.len())))?;
        out.push(term);
        rest = &body[end + 1..];
        if let Some(r) = rest.strip_prefix(',') {
            if r.is_empty() {
                return Err(Error::Syntax("trailing comma".into()));
            }
            rest = r;
        } else if !rest.is_empty() {
            return Err(Error::Syntax(format!("expected `,` at `{}`", preview(rest))));
        }
    }
    Ok(out)
}

fn strip_outer(s: &str) -> Option<&str> {
    let close = match s.chars().next()? {
        '[' => ']',
        '(' => ')',
        _ => return None,
    };
    s.strip_suffix(close).map(|x| &x[1..])
}

fn preview(s: &str) -> String {
    s.chars().take(16).collect()
}
