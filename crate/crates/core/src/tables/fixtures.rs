//! Published best-known parameters for perfect hash families with few rows.
//! `k_fractal` uses fractal heterogeneous ingredients; `k_old` does not.

/// One published column of a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fixture {
    pub table_id: &'static str,
    pub n: usize,
    pub t: usize,
    pub v: usize,
    pub k_fractal: usize,
    pub k_old: usize,
    /// Out-of-sequence values that look like typos; kept but never compared.
    pub anomaly: bool,
}

struct Block {
    id: &'static str,
    n: usize,
    t: usize,
    v: &'static [usize],
    k_fractal: &'static [usize],
    k_old: &'static [usize],
}

const BLOCKS: &[Block] = &[
    Block {
        id: "t6n4",
        n: 4,
        t: 6,
        v: &[121, 127, 163, 166, 169, 211, 217],
        k_fractal: &[188, 198, 256, 260, 266, 334, 344],
        k_old: &[183, 192, 247, 253, 259, 326, 337],
    },
    Block {
        id: "t6n5",
        n: 5,
        t: 6,
        v: &[
            50, 63, 68, 75, 83, 93, 101, 108, 115, 121, 130, 135, 140, 148, 157, 165, 172, 181,
            189, 196, 207, 215, 223, 228, 238, 246,
        ],
        k_fractal: &[
            90, 135, 140, 155, 175, 205, 225, 240, 255, 265, 290, 295, 300, 320, 345, 365, 380,
            405, 425, 440, 475, 495, 515, 520, 550, 570,
        ],
        k_old: &[
            82, 104, 113, 125, 139, 172, 197, 216, 223, 229, 254, 259, 264, 272, 281, 292, 303,
            313, 405, 412, 423, 431, 439, 444, 454, 481,
        ],
    },
    Block {
        id: "t7n5",
        n: 5,
        t: 7,
        v: &[
            78, 80, 81, 82, 114, 115, 123, 124, 127, //
            128, 129, 130, 131, 133, 134, 135, 136, 137, //
            138, 139, 141, 142, 143, 144, 146, 148, 149, //
            150, 154, 155, 156, 157, 158, 159, 161, 162, //
            164, 167, 168, 169, 170, 171, 172, 175, 177, //
            179, 182, 183, 184, 185, 186, 187, 188, 189, //
            190, 191, 192, 193, 194, 195, 196, 197, 201, //
            203, 204, 206, 208, 209, 210, 211, 212, 213, //
            214, 216, 217, 219, 221, 222, 223, 224, 226, //
            227, 229, 230, 231, 232, 233, 234, 235, 236, //
            242, 243, 244, 245, 246, 247, 248, 249,
        ],
        k_fractal: &[
            116, 120, 121, 122, 174, 175, 189, 190, 194, //
            196, 198, 201, 202, 204, 205, 207, 208, 209, //
            210, 214, 217, 218, 219, 224, 226, 228, 233, //
            234, 238, 239, 240, 242, 244, 246, 248, 252, //
            257, 260, 264, 265, 266, 268, 269, 273, 276, //
            281, 284, 287, 288, 289, 290, 292, 294, 297, //
            298, 299, 304, 305, 306, 307, 308, 312, 316, //
            318, 320, 326, 328, 329, 333, 334, 335, 336, //
            340, 343, 344, 346, 348, 349, 350, 354, 360, //
            362, 365, 366, 367, 368, 369, 273, 377, 380, //
            386, 387, 388, 389, 389, 391, 393, 398,
        ],
        k_old: &[
            111, 114, 115, 117, 169, 170, 183, 185, 189, //
            190, 191, 192, 193, 195, 196, 197, 198, 199, //
            200, 202, 204, 207, 211, 216, 211, 213, 217, //
            222, 226, 227, 228, 229, 230, 231, 237, 242, //
            248, 251, 252, 253, 254, 255, 256, 259, 261, //
            266, 269, 270, 272, 274, 275, 277, 279, 281, //
            283, 285, 287, 289, 290, 281, 292, 293, 308, //
            313, 314, 316, 318, 318, 320, 321, 322, 323, //
            324, 326, 327, 329, 331, 333, 335, 337, 341, //
            343, 347, 349, 351, 353, 355, 357, 359, 369, //
            372, 375, 376, 378, 380, 382, 384, 386,
        ],
    },
    Block {
        id: "t8n6",
        n: 6,
        t: 8,
        v: &[108, 120, 135, 158, 174, 184, 195, 207, 218, 227, 240],
        k_fractal: &[162, 192, 216, 240, 270, 288, 300, 324, 336, 360, 384],
        k_old: &[156, 175, 195, 233, 258, 271, 291, 308, 330, 339, 360],
    },
    Block {
        id: "t9n6",
        n: 6,
        t: 9,
        v: &[173, 181, 191, 194, 231, 236, 239],
        k_fractal: &[240, 252, 264, 270, 324, 330, 336],
        k_old: &[234, 244, 256, 259, 315, 320, 323],
    },
    Block {
        id: "t10n7",
        n: 7,
        t: 10,
        v: &[191, 215, 239],
        k_fractal: &[215, 298, 323],
        k_old: &[253, 280, 318],
    },
    Block {
        id: "t11n7",
        n: 7,
        t: 11,
        v: &[143, 179, 191, 209, 239],
        k_fractal: &[183, 230, 245, 269, 308],
        k_old: &[178, 224, 239, 264, 300],
    },
];

/// `(table, v)` pairs whose published values are out of sequence.
const ANOMALIES: &[(&str, usize)] = &[("t10n7", 191), ("t7n5", 234), ("t7n5", 195)];

/// Every published entry, table by table in increasing `v`.
pub fn fixtures() -> Vec<Fixture> {
    BLOCKS
        .iter()
        .flat_map(|b| {
            b.v.iter()
                .zip(b.k_fractal)
                .zip(b.k_old)
                .map(move |((&v, &k_fractal), &k_old)| Fixture {
                    table_id: b.id,
                    n: b.n,
                    t: b.t,
                    v,
                    k_fractal,
                    k_old,
                    anomaly: ANOMALIES.contains(&(b.id, v)),
                })
        })
        .collect()
}
