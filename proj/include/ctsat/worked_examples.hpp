#pragma once

#include <string_view>

// Bundled worked-example tables, byte-identical to fixtures/paper/.
// Data only; a test keeps the two copies in lockstep.

namespace ctsat::worked {

inline constexpr std::string_view k_table1_cnf = R"fx(p cnf 8 44
1 2 3 0
1 -2 3 0
1 -2 -3 0
-1 2 3 0
-1 -2 -3 0
1 -2 5 0
1 3 6 0
1 3 -6 0
-1 -3 6 0
-1 3 -6 0
1 -3 8 0
-1 3 -8 0
-1 -3 -8 0
-1 4 6 0
1 4 -6 0
-1 4 -6 0
1 -4 -6 0
-1 -5 6 0
-1 5 -6 0
2 5 7 0
-2 -5 -7 0
2 5 -7 0
-2 5 7 0
-2 -5 -8 0
2 5 8 0
-2 7 8 0
2 -7 8 0
2 7 -8 0
-2 7 -8 0
-2 -7 -8 0
3 4 5 0
-3 -4 5 0
-3 4 5 0
-3 4 6 0
3 4 6 0
-3 5 -8 0
-3 5 8 0
4 -5 6 0
-4 5 -6 0
5 6 7 0
-5 6 7 0
-5 -6 -7 0
6 -7 8 0
-6 7 -8 0
)fx";

inline constexpr std::string_view k_perms_txt = R"fx(a,b,c,d,e,f,g,h
h,g,b,e,a,f,c,d
d,f,a,c,h,e,b,g
)fx";

inline constexpr std::string_view k_table2_json = R"fx({
 "parts": [
  {
   "permutation": [
    1,
    2,
    3,
    4,
    5,
    6,
    7,
    8
   ],
   "tiers": [
    [
     "000",
     "010",
     "011",
     "100",
     "111"
    ],
    [],
    [
     "000",
     "100",
     "110"
    ],
    [
     "010",
     "101"
    ],
    [
     "000",
     "100",
     "111"
    ],
    [
     "010",
     "101"
    ]
   ]
  },
  {
   "permutation": [
    8,
    7,
    2,
    5,
    1,
    6,
    3,
    4
   ],
   "tiers": [
    [
     "001",
     "010",
     "100",
     "101",
     "111"
    ],
    [
     "000",
     "100",
     "111"
    ],
    [
     "100"
    ],
    [
     "011",
     "110"
    ],
    [
     "000",
     "010",
     "101",
     "110"
    ],
    [
     "000",
     "010"
    ]
   ]
  },
  {
   "permutation": [
    4,
    6,
    1,
    3,
    8,
    5,
    2,
    7
   ],
   "tiers": [
    [
     "001",
     "010",
     "011",
     "110"
    ],
    [
     "000",
     "011"
    ],
    [
     "010",
     "101",
     "111"
    ],
    [
     "100",
     "110"
    ],
    [
     "000",
     "111"
    ],
    [
     "010",
     "111"
    ]
   ]
  }
 ]
}
)fx";

inline constexpr std::string_view k_table3_json = R"fx({
 "structures": [
  {
   "permutation": [
    1,
    2,
    3,
    4,
    5,
    6,
    7,
    8
   ],
   "tiers": [
    [
     "001",
     "101",
     "110"
    ],
    [
     "010",
     "011",
     "100",
     "101"
    ],
    [
     "001",
     "010",
     "011",
     "101",
     "111"
    ],
    [
     "011",
     "100",
     "110",
     "111"
    ],
    [
     "001",
     "101",
     "110"
    ],
    [
     "011",
     "100"
    ]
   ]
  },
  {
   "permutation": [
    8,
    7,
    2,
    5,
    1,
    6,
    3,
    4
   ],
   "tiers": [
    [
     "000",
     "011",
     "110"
    ],
    [
     "001",
     "101",
     "110"
    ],
    [
     "010",
     "011",
     "101"
    ],
    [
     "010",
     "100",
     "101",
     "111"
    ],
    [
     "001",
     "011",
     "100",
     "111"
    ],
    [
     "001",
     "011",
     "110",
     "111"
    ]
   ]
  },
  {
   "permutation": [
    4,
    6,
    1,
    3,
    8,
    5,
    2,
    7
   ],
   "tiers": [
    [
     "000",
     "100",
     "101",
     "111"
    ],
    [
     "001",
     "010",
     "110",
     "111"
    ],
    [
     "011",
     "100",
     "110"
    ],
    [
     "000",
     "001",
     "101",
     "111"
    ],
    [
     "001",
     "010",
     "011",
     "110"
    ],
    [
     "011",
     "100",
     "101",
     "110"
    ]
   ]
  }
 ]
}
)fx";

inline constexpr std::string_view k_table4_json = R"fx({
 "structures": [
  {
   "permutation": [
    1,
    2,
    3,
    4,
    5,
    6,
    7,
    8
   ],
   "tiers": [
    [
     "001",
     "101"
    ],
    [
     "010",
     "011"
    ],
    [
     "101",
     "111"
    ],
    [
     "011",
     "110",
     "111"
    ],
    [
     "101",
     "110"
    ],
    [
     "011",
     "100"
    ]
   ]
  },
  {
   "permutation": [
    8,
    7,
    2,
    5,
    1,
    6,
    3,
    4
   ],
   "tiers": [
    [
     "000",
     "110"
    ],
    [
     "001",
     "101"
    ],
    [
     "010",
     "011"
    ],
    [
     "100",
     "101",
     "111"
    ],
    [
     "001",
     "011",
     "111"
    ],
    [
     "011",
     "110",
     "111"
    ]
   ]
  }
 ]
}
)fx";

inline constexpr std::string_view k_table5_json = R"fx({
 "cic": "10101100",
 "structures": [
  {
   "permutation": [
    1,
    2,
    3,
    4,
    5,
    6,
    7,
    8
   ],
   "tiers": [
    [
     "000",
     "100"
    ],
    [
     "000",
     "001"
    ],
    [
     "000",
     "010"
    ],
    [
     "000",
     "100",
     "101"
    ],
    [
     "000",
     "011"
    ],
    [
     "000",
     "111"
    ]
   ]
  },
  {
   "permutation": [
    8,
    7,
    2,
    5,
    1,
    6,
    3,
    4
   ],
   "tiers": [
    [
     "000",
     "110"
    ],
    [
     "000",
     "100"
    ],
    [
     "000",
     "001"
    ],
    [
     "000",
     "010",
     "011"
    ],
    [
     "000",
     "100",
     "110"
    ],
    [
     "000",
     "001",
     "101"
    ]
   ]
  }
 ]
}
)fx";

inline constexpr std::string_view k_table6_json = R"fx({
 "structures": [
  {
   "permutation": [
    1,
    2,
    3,
    4,
    5,
    6,
    7,
    8
   ],
   "tiers": [
    [
     "001",
     "101"
    ],
    [
     "011"
    ],
    [
     "111"
    ],
    [
     "110",
     "111"
    ],
    [
     "101",
     "110"
    ],
    [
     "011",
     "100"
    ]
   ]
  },
  {
   "permutation": [
    8,
    7,
    2,
    5,
    1,
    6,
    3,
    4
   ],
   "tiers": [
    [
     "000",
     "110"
    ],
    [
     "001",
     "101"
    ],
    [
     "010",
     "011"
    ],
    [
     "100",
     "111"
    ],
    [
     "001",
     "111"
    ],
    [
     "011",
     "111"
    ]
   ]
  },
  {
   "permutation": [
    4,
    6,
    1,
    3,
    8,
    5,
    2,
    7
   ],
   "tiers": [
    [
     "100",
     "111"
    ],
    [
     "001",
     "111"
    ],
    [
     "011",
     "110"
    ],
    [
     "101",
     "111"
    ],
    [
     "010",
     "110"
    ],
    [
     "100",
     "101"
    ]
   ]
  }
 ]
}
)fx";

inline constexpr std::string_view k_table7_json = R"fx({
 "structures": [
  {
   "forbidden_pairs": [
    [
     4,
     "01",
     "10"
    ]
   ],
   "permutation": [
    1,
    2,
    3,
    4,
    5,
    6,
    7,
    8
   ],
   "tiers": [
    [
     "00",
     "10"
    ],
    [
     "01"
    ],
    [
     "10",
     "11"
    ],
    [
     "01",
     "11"
    ],
    [
     "10",
     "11"
    ],
    [
     "01",
     "10"
    ],
    [
     "00",
     "11"
    ]
   ]
  },
  {
   "forbidden_pairs": [
    [
     6,
     "01",
     "10"
    ]
   ],
   "permutation": [
    8,
    7,
    2,
    5,
    1,
    6,
    3,
    4
   ],
   "tiers": [
    [
     "00",
     "11"
    ],
    [
     "00",
     "10"
    ],
    [
     "01"
    ],
    [
     "10",
     "11"
    ],
    [
     "00",
     "01",
     "11"
    ],
    [
     "01",
     "11"
    ],
    [
     "10",
     "11"
    ]
   ]
  }
 ]
}
)fx";

inline constexpr std::string_view k_table10_json = R"fx({
 "cic": "00101000",
 "structures": [
  {
   "forbidden_pairs": [],
   "permutation": [
    1,
    2,
    3,
    4,
    5,
    6,
    7,
    8
   ],
   "tiers": [
    [
     "00",
     "10"
    ],
    [
     "00"
    ],
    [
     "01"
    ],
    [
     "10"
    ],
    [
     "00",
     "01"
    ],
    [
     "01",
     "10"
    ],
    [
     "00",
     "11"
    ]
   ]
  },
  {
   "forbidden_pairs": [],
   "permutation": [
    8,
    7,
    2,
    5,
    1,
    6,
    3,
    4
   ],
   "tiers": [
    [
     "00",
     "11"
    ],
    [
     "00",
     "10"
    ],
    [
     "00"
    ],
    [
     "00",
     "01"
    ],
    [
     "00",
     "11"
    ],
    [
     "00",
     "10"
    ],
    [
     "01"
    ]
   ]
  },
  {
   "forbidden_pairs": [
    [
     3,
     "00",
     "00"
    ],
    [
     3,
     "10",
     "01"
    ]
   ],
   "permutation": [
    4,
    6,
    1,
    3,
    8,
    5,
    2,
    7
   ],
   "tiers": [
    [
     "10",
     "11"
    ],
    [
     "00",
     "11"
    ],
    [
     "00",
     "10"
    ],
    [
     "00",
     "01"
    ],
    [
     "00",
     "10"
    ],
    [
     "00"
    ],
    [
     "00",
     "01"
    ]
   ]
  }
 ]
}
)fx";

inline constexpr std::string_view k_table11_json = R"fx({
 "cic": "00111011",
 "structures": [
  {
   "forbidden_pairs": [],
   "permutation": [
    1,
    2,
    3,
    4,
    5,
    6,
    7,
    8
   ],
   "tiers": [
    [
     "00",
     "10"
    ],
    [
     "00"
    ],
    [
     "00"
    ],
    [
     "00"
    ],
    [
     "00",
     "01"
    ],
    [
     "00",
     "11"
    ],
    [
     "00",
     "11"
    ]
   ]
  },
  {
   "forbidden_pairs": [],
   "permutation": [
    8,
    7,
    2,
    5,
    1,
    6,
    3,
    4
   ],
   "tiers": [
    [
     "00",
     "11"
    ],
    [
     "00",
     "10"
    ],
    [
     "00"
    ],
    [
     "00",
     "01"
    ],
    [
     "00",
     "11"
    ],
    [
     "00",
     "10"
    ],
    [
     "00"
    ]
   ]
  },
  {
   "forbidden_pairs": [
    [
     3,
     "00",
     "01"
    ],
    [
     3,
     "10",
     "00"
    ]
   ],
   "permutation": [
    4,
    6,
    1,
    3,
    8,
    5,
    2,
    7
   ],
   "tiers": [
    [
     "00",
     "01"
    ],
    [
     "00",
     "11"
    ],
    [
     "00",
     "10"
    ],
    [
     "00",
     "01"
    ],
    [
     "00",
     "10"
    ],
    [
     "00"
    ],
    [
     "00",
     "01"
    ]
   ]
  }
 ]
}
)fx";

inline constexpr std::string_view k_table12_json = R"fx({
 "structures": [
  {
   "forbidden_pairs": [],
   "permutation": [
    1,
    2,
    3,
    4,
    5,
    6,
    7,
    8
   ],
   "tiers": [
    [
     "00",
     "10"
    ],
    [
     "01"
    ],
    [
     "11"
    ],
    [
     "11"
    ],
    [
     "10",
     "11"
    ],
    [
     "01",
     "10"
    ],
    [
     "00",
     "11"
    ]
   ]
  },
  {
   "forbidden_pairs": [],
   "permutation": [
    8,
    7,
    2,
    5,
    6,
    3,
    4,
    1
   ],
   "tiers": [
    [
     "00",
     "11"
    ],
    [
     "00",
     "10"
    ],
    [
     "01"
    ],
    [
     "10",
     "11"
    ],
    [
     "01",
     "11"
    ],
    [
     "11"
    ],
    [
     "10",
     "11"
    ]
   ]
  },
  {
   "forbidden_pairs": [],
   "permutation": [
    2,
    3,
    4,
    5,
    1,
    6,
    8,
    7
   ],
   "tiers": [
    [
     "01"
    ],
    [
     "11"
    ],
    [
     "11"
    ],
    [
     "10",
     "11"
    ],
    [
     "01",
     "10"
    ],
    [
     "01",
     "10"
    ],
    [
     "01",
     "10"
    ]
   ]
  }
 ]
}
)fx";

inline constexpr std::string_view k_jss_json = R"fx({
 "table4": [
  "00101100",
  "00111011",
  "00111100",
  "10101100",
  "10111100"
 ],
 "table6": [
  "00111011",
  "10111100"
 ]
}
)fx";

inline constexpr std::string_view k_section2_json = R"fx({
 "cleared": [
  [
   "011",
   "100"
  ],
  [
   "001",
   "110"
  ],
  [
   "011",
   "101"
  ]
 ],
 "ctf_tiers": [
  [
   "000",
   "001",
   "101",
   "111"
  ],
  [
   "000",
   "100",
   "101",
   "111"
  ],
  [
   "010",
   "100",
   "111"
  ]
 ],
 "pre_clear": [
  [
   "010",
   "011",
   "100",
   "110"
  ],
  [
   "001",
   "010",
   "011",
   "110"
  ],
  [
   "000",
   "001",
   "011",
   "101",
   "110"
  ]
 ],
 "removed": [
  [
   "010",
   "110"
  ],
  [
   "010",
   "011"
  ],
  [
   "000",
   "001",
   "110"
  ]
 ],
 "sets": [
  "01101",
  "10011"
 ]
}
)fx";

inline constexpr std::string_view k_examples_json = R"fx({
 "example1": {
  "alt_a0_f1": "001*1100",
  "alt_a1": "101*1100",
  "backtracks": 0,
  "preprocess_u": "00101000",
  "residues": [
   "a",
   "f"
  ],
  "start_order": "a,f",
  "witness": "00111011"
 },
 "example2": {
  "backtracks": 0,
  "preprocess_u": "00111000",
  "residues": [
   "a"
  ],
  "witness": "00111011"
 },
 "example3": {
  "backtracks": 1,
  "residues": [
   "a"
  ],
  "verdict": "UNSAT"
 }
}
)fx";

}  // namespace ctsat::worked
