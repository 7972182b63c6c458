use std::fmt;

/// The three cyclic vertex correspondences between two triangles.
///
/// `P` matches `A₁→A₂, B₁→B₂, C₁→C₂`; `Q` matches `A₁→B₂, B₁→C₂, C₁→A₂`;
/// `R` matches `A₁→C₂, B₁→A₂, C₁→B₂`. Under mode `k` the side of the first
/// triangle opposite vertex `i` is paired with the side of the second
/// opposite vertex `i + k (mod 3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    P,
    Q,
    R,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::P, Mode::Q, Mode::R];

    pub fn shift(self) -> usize {
        match self {
            Mode::P => 0,
            Mode::Q => 1,
            Mode::R => 2,
        }
    }

    pub fn correspondence(self) -> Correspondence {
        let k = self.shift();
        Correspondence([k % 3, (1 + k) % 3, (2 + k) % 3])
    }

    /// Mode of the same pairing read from the second triangle to the first.
    pub fn inverse(self) -> Mode {
        match self {
            Mode::P => Mode::P,
            Mode::Q => Mode::R,
            Mode::R => Mode::Q,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::P => "P",
            Mode::Q => "Q",
            Mode::R => "R",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Bijection from the first triangle's vertex indices to the second's.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Correspondence([usize; 3]);

impl Correspondence {
    /// All six bijections; the three cyclic ones come first in `P, Q, R` order.
    pub const ALL: [Correspondence; 6] = [
        Correspondence([0, 1, 2]),
        Correspondence([1, 2, 0]),
        Correspondence([2, 0, 1]),
        Correspondence([0, 2, 1]),
        Correspondence([2, 1, 0]),
        Correspondence([1, 0, 2]),
    ];

    pub fn new(perm: [usize; 3]) -> Option<Self> {
        let mut seen = [false; 3];
        for &i in &perm {
            if i > 2 || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Self(perm))
    }

    pub fn perm(&self) -> [usize; 3] {
        self.0
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn mode(&self) -> Option<Mode> {
        Mode::ALL.into_iter().find(|m| m.correspondence() == *self)
    }

    pub fn is_cyclic(&self) -> bool {
        self.mode().is_some()
    }

    /// Label such as `A→B, B→C, C→A`.
    pub fn label(&self) -> String {
        const N: [char; 3] = ['A', 'B', 'C'];
        (0..3)
            .map(|i| format!("{}→{}", N[i], N[self.0[i]]))
            .collect::<Vec<_>>()
            .join(", ")
    }
}
