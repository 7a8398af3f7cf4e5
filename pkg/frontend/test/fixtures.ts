/**
 * Captured service responses for the two reference hexagons (a symmetric
 * one and the non-symmetric equal-area one), used by the unit tests so
 * they exercise real wire payloads without a running server.
 */

export const FIXTURES = {
  "sym": {
    "snapshot": {
      "id": "26bfe9e68b7c",
      "n": 3,
      "polygon": {
        "vertices": [
          [
            "2",
            "0"
          ],
          [
            "1",
            "2"
          ],
          [
            "-1",
            "2"
          ],
          [
            "-2",
            "0"
          ],
          [
            "-1",
            "-2"
          ],
          [
            "1",
            "-2"
          ]
        ]
      }
    },
    "scene_ae_css": {
      "polygon": {
        "vertices": [
          [
            "2",
            "0"
          ],
          [
            "1",
            "2"
          ],
          [
            "-1",
            "2"
          ],
          [
            "-2",
            "0"
          ],
          [
            "-1",
            "-2"
          ],
          [
            "1",
            "-2"
          ]
        ]
      },
      "layers": {
        "ae": {
          "points": [
            [
              "0",
              "0"
            ]
          ],
          "closed": true,
          "cusps": [],
          "degenerate": "point"
        },
        "css": {
          "points": [
            [
              "0",
              "0"
            ]
          ],
          "closed": true,
          "cusps": [],
          "degenerate": "point"
        }
      },
      "refusals": {},
      "id": "26bfe9e68b7c"
    },
    "projected": {
      "id": "5ab68fda6aa7",
      "polygon": {
        "vertices": [
          [
            "5/2",
            "1/4"
          ],
          [
            "119/80",
            "91/40"
          ],
          [
            "-67/80",
            "91/40"
          ],
          [
            "-159/80",
            "-1/40"
          ],
          [
            "-1",
            "-2"
          ],
          [
            "11/8",
            "-2"
          ]
        ]
      },
      "clamped": false
    },
    "projected_scene": {
      "polygon": {
        "vertices": [
          [
            "5/2",
            "1/4"
          ],
          [
            "119/80",
            "91/40"
          ],
          [
            "-67/80",
            "91/40"
          ],
          [
            "-159/80",
            "-1/40"
          ],
          [
            "-1",
            "-2"
          ],
          [
            "11/8",
            "-2"
          ]
        ]
      },
      "layers": {
        "ae": {
          "points": [
            [
              "41/160",
              "9/80"
            ],
            [
              "39/160",
              "11/80"
            ],
            [
              "43/160",
              "11/80"
            ]
          ],
          "closed": true,
          "cusps": [
            true,
            true,
            true
          ]
        },
        "css": {
          "points": [
            [
              "409/1456",
              "83/728"
            ],
            [
              "2921/12800",
              "709/6400"
            ],
            [
              "773/3008",
              "241/1504"
            ]
          ],
          "closed": true,
          "cusps": [
            true,
            true,
            true
          ]
        }
      },
      "refusals": {},
      "id": "5ab68fda6aa7"
    }
  },
  "ea2": {
    "snapshot": {
      "id": "c87cdeac6a5b",
      "n": 3,
      "polygon": {
        "vertices": [
          [
            "0",
            "0"
          ],
          [
            "1",
            "0"
          ],
          [
            "1",
            "2"
          ],
          [
            "0",
            "3"
          ],
          [
            "-2",
            "3"
          ],
          [
            "-2",
            "2"
          ]
        ]
      }
    },
    "scene_half": {
      "polygon": {
        "vertices": [
          [
            "0",
            "0"
          ],
          [
            "1",
            "0"
          ],
          [
            "1",
            "2"
          ],
          [
            "0",
            "3"
          ],
          [
            "-2",
            "3"
          ],
          [
            "-2",
            "2"
          ]
        ]
      },
      "layers": {
        "ae": {
          "points": [
            [
              "0",
              "3/2"
            ],
            [
              "-1/2",
              "3/2"
            ],
            [
              "-1/2",
              "2"
            ]
          ],
          "closed": true,
          "cusps": [
            true,
            true,
            true
          ]
        },
        "css": {
          "points": [
            [
              "0",
              "2"
            ],
            [
              "0",
              "1"
            ],
            [
              "-1",
              "2"
            ]
          ],
          "closed": true,
          "cusps": [
            true,
            true,
            true
          ]
        },
        "equidistant": {
          "t": "1/2",
          "points": [
            [
              "0",
              "3/2"
            ],
            [
              "-1/2",
              "3/2"
            ],
            [
              "-1/2",
              "2"
            ],
            [
              "0",
              "3/2"
            ],
            [
              "-1/2",
              "3/2"
            ],
            [
              "-1/2",
              "2"
            ]
          ],
          "cusps": [
            true,
            true,
            true,
            true,
            true,
            true
          ],
          "closed": true
        }
      },
      "refusals": {},
      "id": "c87cdeac6a5b"
    },
    "probe_in": {
      "at": [
        "-3/8",
        "13/8"
      ],
      "n": 3
    },
    "probe_out": {
      "at": [
        "-1/2",
        "1"
      ],
      "n": 1
    }
  }
} as const;
