use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{faces, CombinatorialMap, Dart, FaceSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// Two-coloring of the faces of a map, carried together with the face index
/// of every dart so that corners can be looked up directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckerboardColoring {
    face_of: Vec<usize>,
    colors: Vec<Color>,
}

impl CheckerboardColoring {
    pub fn face_count(&self) -> usize {
        self.colors.len()
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn face_color(&self, f: usize) -> Color {
        self.colors[f]
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d]
    }

    /// Color of the corner swept counterclockwise from `d` to `sigma(d)`.
    pub fn corner_color(&self, map: &CombinatorialMap, d: Dart) -> Color {
        self.colors[self.face_of[map.sigma(d)]]
    }

    pub fn count(&self, color: Color) -> usize {
        self.colors.iter().filter(|&&c| c == color).count()
    }

    /// Faces of the given color in increasing order of their lowest dart.
    pub fn faces_of(&self, color: Color) -> Vec<usize> {
        (0..self.colors.len()).filter(|&f| self.colors[f] == color).collect()
    }

    pub fn swapped(&self) -> Self {
        CheckerboardColoring {
            face_of: self.face_of.clone(),
            colors: self.colors.iter().map(|c| c.other()).collect(),
        }
    }

    /// Every edge separates faces of different colors.
    pub fn is_proper(&self, map: &CombinatorialMap) -> bool {
        map.darts()
            .all(|d| self.colors[self.face_of[d]] != self.colors[self.face_of[map.alpha(d)]])
    }
}

/// Proper two-coloring of the faces, or `None` when the parity constraints
/// (one per edge) are inconsistent. The face through dart 0 is white.
pub fn checkerboard_coloring(map: &CombinatorialMap) -> Option<CheckerboardColoring> {
    let fs: FaceSet = faces(map);
    let mut colors: Vec<Option<Color>> = vec![None; fs.len()];
    colors[fs.face_of[0]] = Some(Color::White);
    let mut queue = VecDeque::from([fs.face_of[0]]);
    while let Some(f) = queue.pop_front() {
        let here = colors[f].expect("queued faces are colored");
        for &d in &fs.faces[f] {
            let g = fs.face_of[map.alpha(d)];
            match colors[g] {
                None => {
                    colors[g] = Some(here.other());
                    queue.push_back(g);
                }
                Some(c) if c == here => return None,
                Some(_) => {}
            }
        }
    }
    let colors = colors.into_iter().map(|c| c.expect("connected map colors every face")).collect();
    Some(CheckerboardColoring { face_of: fs.face_of, colors })
}
