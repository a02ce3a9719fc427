//! Text rendering of a path on its `n × n` grid.

use crate::path::DyckPath;

/// Glyphs and overlays for [`render`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderSpec {
    pub area: char,
    pub floating: char,
    pub bounce: char,
    pub empty: char,
    /// Mark the cells just right of each north run of the bounce path.
    pub show_bounce: bool,
    /// Draw floating cells with their own glyph.
    pub show_floating: bool,
    pub footer: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            area: '#',
            floating: 'o',
            bounce: '*',
            empty: '.',
            show_bounce: false,
            show_floating: false,
            footer: true,
        }
    }
}

/// One line per row, top row first, `n` glyphs per line; cell `(r, c)` is an
/// area cell when `x_r < c <= r - 1`.
pub fn render(path: &DyckPath, spec: &RenderSpec) -> String {
    let n = path.n();
    let offsets = path.row_offsets();
    let bp = path.bounce_path();
    let bounce_col = bp.row_starts();
    let mut floating = vec![vec![false; n + 1]; n + 1];
    for (r, c) in path.floating_cells() {
        floating[r][c] = true;
    }
    let mut out = String::with_capacity((n + 1) * (n + 1) + 16);
    for r in (1..=n).rev() {
        for (c, &is_floating) in floating[r].iter().enumerate().skip(1) {
            let glyph = if spec.show_bounce && c == bounce_col[r - 1] + 1 {
                spec.bounce
            } else if offsets[r - 1] < c && c < r {
                if spec.show_floating && is_floating {
                    spec.floating
                } else {
                    spec.area
                }
            } else {
                spec.empty
            };
            out.push(glyph);
        }
        out.push('\n');
    }
    if spec.footer {
        out.push_str(&format!("a={} b={}\n", path.area(), path.bounce()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain(word: &str, floating: bool) -> String {
        let spec = RenderSpec {
            show_floating: floating,
            footer: false,
            ..RenderSpec::default()
        };
        render(&word.parse().unwrap(), &spec)
    }

    #[test]
    fn staircase_is_empty() {
        assert_eq!(plain("NENENE", false), "...\n...\n...\n");
    }

    #[test]
    fn full_triangle() {
        assert_eq!(plain("NNNEEE", false), "##.\n#..\n...\n");
        let with_footer = render(&DyckPath::full(3), &RenderSpec::default());
        assert!(with_footer.ends_with("a=3 b=0\n"));
    }

    #[test]
    fn one_floating_cell_in_example_path() {
        let s = plain("NNNEENENEENNEE", true);
        assert_eq!(s.matches('o').count(), 1);
        assert_eq!(s.matches('#').count(), 5);
        assert_eq!(s.lines().count(), 7);
        assert!(s.lines().all(|l| l.chars().count() == 7));
    }
}
