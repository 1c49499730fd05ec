// Generated by tools/oracle/gen_fixtures.py -- do not edit.
#pragma once

struct SpectralFixture {
  int k; const char* lambda; int p; int jcase; int eps;
  const char* a; const char* b; const char* alpha;
  const char* beta; long n;
};

inline constexpr SpectralFixture kSpectralGrid[] = {
  {3, "610/1", -20, 3, -1, "1/3", "1/4", "-1/2", "-1/3", 10},
  {3, "551/1", -19, 4, -1, "1/3", "3/4", "1/2", "-1/3", 9},
  {3, "495/1", -18, 3, -1, "1/3", "1/4", "-1/2", "-1/3", 9},
  {3, "442/1", -17, 4, -1, "1/3", "3/4", "1/2", "-1/3", 8},
  {3, "392/1", -16, 3, -1, "1/3", "1/4", "-1/2", "-1/3", 8},
  {3, "345/1", -15, 4, -1, "1/3", "3/4", "1/2", "-1/3", 7},
  {3, "301/1", -14, 3, -1, "1/3", "1/4", "-1/2", "-1/3", 7},
  {3, "260/1", -13, 4, -1, "1/3", "3/4", "1/2", "-1/3", 6},
  {3, "222/1", -12, 3, -1, "1/3", "1/4", "-1/2", "-1/3", 6},
  {3, "187/1", -11, 4, -1, "1/3", "3/4", "1/2", "-1/3", 5},
  {3, "155/1", -10, 3, -1, "1/3", "1/4", "-1/2", "-1/3", 5},
  {3, "126/1", -9, 4, -1, "1/3", "3/4", "1/2", "-1/3", 4},
  {3, "100/1", -8, 3, -1, "1/3", "1/4", "-1/2", "-1/3", 4},
  {3, "77/1", -7, 4, -1, "1/3", "3/4", "1/2", "-1/3", 3},
  {3, "57/1", -6, 3, -1, "1/3", "1/4", "-1/2", "-1/3", 3},
  {3, "40/1", -5, 4, -1, "1/3", "3/4", "1/2", "-1/3", 2},
  {3, "26/1", -4, 3, -1, "1/3", "1/4", "-1/2", "-1/3", 2},
  {3, "15/1", -3, 4, -1, "1/3", "3/4", "1/2", "-1/3", 1},
  {3, "7/1", -2, 3, -1, "1/3", "1/4", "-1/2", "-1/3", 1},
  {3, "2/1", -1, 4, -1, "1/3", "3/4", "1/2", "-1/3", 0},
  {3, "0/1", 0, 3, -1, "1/3", "1/4", "-1/2", "-1/3", 0},
  {3, "1/1", 1, 1, 1, "2/3", "1/4", "-1/2", "1/3", 0},
  {3, "5/1", 2, 2, 1, "2/3", "3/4", "1/2", "1/3", 0},
  {3, "12/1", 3, 1, 1, "2/3", "1/4", "-1/2", "1/3", 1},
  {3, "22/1", 4, 2, 1, "2/3", "3/4", "1/2", "1/3", 1},
  {3, "35/1", 5, 1, 1, "2/3", "1/4", "-1/2", "1/3", 2},
  {3, "51/1", 6, 2, 1, "2/3", "3/4", "1/2", "1/3", 2},
  {3, "70/1", 7, 1, 1, "2/3", "1/4", "-1/2", "1/3", 3},
  {3, "92/1", 8, 2, 1, "2/3", "3/4", "1/2", "1/3", 3},
  {3, "117/1", 9, 1, 1, "2/3", "1/4", "-1/2", "1/3", 4},
  {3, "145/1", 10, 2, 1, "2/3", "3/4", "1/2", "1/3", 4},
  {3, "176/1", 11, 1, 1, "2/3", "1/4", "-1/2", "1/3", 5},
  {3, "210/1", 12, 2, 1, "2/3", "3/4", "1/2", "1/3", 5},
  {3, "247/1", 13, 1, 1, "2/3", "1/4", "-1/2", "1/3", 6},
  {3, "287/1", 14, 2, 1, "2/3", "3/4", "1/2", "1/3", 6},
  {3, "330/1", 15, 1, 1, "2/3", "1/4", "-1/2", "1/3", 7},
  {3, "376/1", 16, 2, 1, "2/3", "3/4", "1/2", "1/3", 7},
  {3, "425/1", 17, 1, 1, "2/3", "1/4", "-1/2", "1/3", 8},
  {3, "477/1", 18, 2, 1, "2/3", "3/4", "1/2", "1/3", 8},
  {3, "532/1", 19, 1, 1, "2/3", "1/4", "-1/2", "1/3", 9},
  {3, "590/1", 20, 2, 1, "2/3", "3/4", "1/2", "1/3", 9},
  {-3, "-650/1", -20, 3, -1, "2/3", "1/4", "-1/2", "1/3", 10},
  {-3, "-589/1", -19, 4, -1, "2/3", "3/4", "1/2", "1/3", 9},
  {-3, "-531/1", -18, 3, -1, "2/3", "1/4", "-1/2", "1/3", 9},
  {-3, "-476/1", -17, 4, -1, "2/3", "3/4", "1/2", "1/3", 8},
  {-3, "-424/1", -16, 3, -1, "2/3", "1/4", "-1/2", "1/3", 8},
  {-3, "-375/1", -15, 4, -1, "2/3", "3/4", "1/2", "1/3", 7},
  {-3, "-329/1", -14, 3, -1, "2/3", "1/4", "-1/2", "1/3", 7},
  {-3, "-286/1", -13, 4, -1, "2/3", "3/4", "1/2", "1/3", 6},
  {-3, "-246/1", -12, 3, -1, "2/3", "1/4", "-1/2", "1/3", 6},
  {-3, "-209/1", -11, 4, -1, "2/3", "3/4", "1/2", "1/3", 5},
  {-3, "-175/1", -10, 3, -1, "2/3", "1/4", "-1/2", "1/3", 5},
  {-3, "-144/1", -9, 4, -1, "2/3", "3/4", "1/2", "1/3", 4},
  {-3, "-116/1", -8, 3, -1, "2/3", "1/4", "-1/2", "1/3", 4},
  {-3, "-91/1", -7, 4, -1, "2/3", "3/4", "1/2", "1/3", 3},
  {-3, "-69/1", -6, 3, -1, "2/3", "1/4", "-1/2", "1/3", 3},
  {-3, "-50/1", -5, 4, -1, "2/3", "3/4", "1/2", "1/3", 2},
  {-3, "-34/1", -4, 3, -1, "2/3", "1/4", "-1/2", "1/3", 2},
  {-3, "-21/1", -3, 4, -1, "2/3", "3/4", "1/2", "1/3", 1},
  {-3, "-11/1", -2, 3, -1, "2/3", "1/4", "-1/2", "1/3", 1},
  {-3, "-4/1", -1, 4, -1, "2/3", "3/4", "1/2", "1/3", 0},
  {-3, "0/1", 0, 3, -1, "2/3", "1/4", "-1/2", "1/3", 0},
  {-3, "1/1", 1, 1, 1, "1/3", "1/4", "-1/2", "-1/3", 0},
  {-3, "-1/1", 2, 2, 1, "1/3", "3/4", "1/2", "-1/3", 0},
  {-3, "-6/1", 3, 1, 1, "1/3", "1/4", "-1/2", "-1/3", 1},
  {-3, "-14/1", 4, 2, 1, "1/3", "3/4", "1/2", "-1/3", 1},
  {-3, "-25/1", 5, 1, 1, "1/3", "1/4", "-1/2", "-1/3", 2},
  {-3, "-39/1", 6, 2, 1, "1/3", "3/4", "1/2", "-1/3", 2},
  {-3, "-56/1", 7, 1, 1, "1/3", "1/4", "-1/2", "-1/3", 3},
  {-3, "-76/1", 8, 2, 1, "1/3", "3/4", "1/2", "-1/3", 3},
  {-3, "-99/1", 9, 1, 1, "1/3", "1/4", "-1/2", "-1/3", 4},
  {-3, "-125/1", 10, 2, 1, "1/3", "3/4", "1/2", "-1/3", 4},
  {-3, "-154/1", 11, 1, 1, "1/3", "1/4", "-1/2", "-1/3", 5},
  {-3, "-186/1", 12, 2, 1, "1/3", "3/4", "1/2", "-1/3", 5},
  {-3, "-221/1", 13, 1, 1, "1/3", "1/4", "-1/2", "-1/3", 6},
  {-3, "-259/1", 14, 2, 1, "1/3", "3/4", "1/2", "-1/3", 6},
  {-3, "-300/1", 15, 1, 1, "1/3", "1/4", "-1/2", "-1/3", 7},
  {-3, "-344/1", 16, 2, 1, "1/3", "3/4", "1/2", "-1/3", 7},
  {-3, "-391/1", 17, 1, 1, "1/3", "1/4", "-1/2", "-1/3", 8},
  {-3, "-441/1", 18, 2, 1, "1/3", "3/4", "1/2", "-1/3", 8},
  {-3, "-494/1", 19, 1, 1, "1/3", "1/4", "-1/2", "-1/3", 9},
  {-3, "-550/1", 20, 2, 1, "1/3", "3/4", "1/2", "-1/3", 9},
  {4, "820/1", -20, 3, -1, "3/8", "1/4", "-1/2", "-1/4", 10},
  {4, "741/1", -19, 4, -1, "3/8", "3/4", "1/2", "-1/4", 9},
  {4, "666/1", -18, 3, -1, "3/8", "1/4", "-1/2", "-1/4", 9},
  {4, "595/1", -17, 4, -1, "3/8", "3/4", "1/2", "-1/4", 8},
  {4, "528/1", -16, 3, -1, "3/8", "1/4", "-1/2", "-1/4", 8},
  {4, "465/1", -15, 4, -1, "3/8", "3/4", "1/2", "-1/4", 7},
  {4, "406/1", -14, 3, -1, "3/8", "1/4", "-1/2", "-1/4", 7},
  {4, "351/1", -13, 4, -1, "3/8", "3/4", "1/2", "-1/4", 6},
  {4, "300/1", -12, 3, -1, "3/8", "1/4", "-1/2", "-1/4", 6},
  {4, "253/1", -11, 4, -1, "3/8", "3/4", "1/2", "-1/4", 5},
  {4, "210/1", -10, 3, -1, "3/8", "1/4", "-1/2", "-1/4", 5},
  {4, "171/1", -9, 4, -1, "3/8", "3/4", "1/2", "-1/4", 4},
  {4, "136/1", -8, 3, -1, "3/8", "1/4", "-1/2", "-1/4", 4},
  {4, "105/1", -7, 4, -1, "3/8", "3/4", "1/2", "-1/4", 3},
  {4, "78/1", -6, 3, -1, "3/8", "1/4", "-1/2", "-1/4", 3},
  {4, "55/1", -5, 4, -1, "3/8", "3/4", "1/2", "-1/4", 2},
  {4, "36/1", -4, 3, -1, "3/8", "1/4", "-1/2", "-1/4", 2},
  {4, "21/1", -3, 4, -1, "3/8", "3/4", "1/2", "-1/4", 1},
  {4, "10/1", -2, 3, -1, "3/8", "1/4", "-1/2", "-1/4", 1},
  {4, "3/1", -1, 4, -1, "3/8", "3/4", "1/2", "-1/4", 0},
  {4, "0/1", 0, 3, -1, "3/8", "1/4", "-1/2", "-1/4", 0},
  {4, "1/1", 1, 1, 1, "5/8", "1/4", "-1/2", "1/4", 0},
  {4, "6/1", 2, 2, 1, "5/8", "3/4", "1/2", "1/4", 0},
  {4, "15/1", 3, 1, 1, "5/8", "1/4", "-1/2", "1/4", 1},
  {4, "28/1", 4, 2, 1, "5/8", "3/4", "1/2", "1/4", 1},
  {4, "45/1", 5, 1, 1, "5/8", "1/4", "-1/2", "1/4", 2},
  {4, "66/1", 6, 2, 1, "5/8", "3/4", "1/2", "1/4", 2},
  {4, "91/1", 7, 1, 1, "5/8", "1/4", "-1/2", "1/4", 3},
  {4, "120/1", 8, 2, 1, "5/8", "3/4", "1/2", "1/4", 3},
  {4, "153/1", 9, 1, 1, "5/8", "1/4", "-1/2", "1/4", 4},
  {4, "190/1", 10, 2, 1, "5/8", "3/4", "1/2", "1/4", 4},
  {4, "231/1", 11, 1, 1, "5/8", "1/4", "-1/2", "1/4", 5},
  {4, "276/1", 12, 2, 1, "5/8", "3/4", "1/2", "1/4", 5},
  {4, "325/1", 13, 1, 1, "5/8", "1/4", "-1/2", "1/4", 6},
  {4, "378/1", 14, 2, 1, "5/8", "3/4", "1/2", "1/4", 6},
  {4, "435/1", 15, 1, 1, "5/8", "1/4", "-1/2", "1/4", 7},
  {4, "496/1", 16, 2, 1, "5/8", "3/4", "1/2", "1/4", 7},
  {4, "561/1", 17, 1, 1, "5/8", "1/4", "-1/2", "1/4", 8},
  {4, "630/1", 18, 2, 1, "5/8", "3/4", "1/2", "1/4", 8},
  {4, "703/1", 19, 1, 1, "5/8", "1/4", "-1/2", "1/4", 9},
  {4, "780/1", 20, 2, 1, "5/8", "3/4", "1/2", "1/4", 9},
  {-4, "-860/1", -20, 3, -1, "5/8", "1/4", "-1/2", "1/4", 10},
  {-4, "-779/1", -19, 4, -1, "5/8", "3/4", "1/2", "1/4", 9},
  {-4, "-702/1", -18, 3, -1, "5/8", "1/4", "-1/2", "1/4", 9},
  {-4, "-629/1", -17, 4, -1, "5/8", "3/4", "1/2", "1/4", 8},
  {-4, "-560/1", -16, 3, -1, "5/8", "1/4", "-1/2", "1/4", 8},
  {-4, "-495/1", -15, 4, -1, "5/8", "3/4", "1/2", "1/4", 7},
  {-4, "-434/1", -14, 3, -1, "5/8", "1/4", "-1/2", "1/4", 7},
  {-4, "-377/1", -13, 4, -1, "5/8", "3/4", "1/2", "1/4", 6},
  {-4, "-324/1", -12, 3, -1, "5/8", "1/4", "-1/2", "1/4", 6},
  {-4, "-275/1", -11, 4, -1, "5/8", "3/4", "1/2", "1/4", 5},
  {-4, "-230/1", -10, 3, -1, "5/8", "1/4", "-1/2", "1/4", 5},
  {-4, "-189/1", -9, 4, -1, "5/8", "3/4", "1/2", "1/4", 4},
  {-4, "-152/1", -8, 3, -1, "5/8", "1/4", "-1/2", "1/4", 4},
  {-4, "-119/1", -7, 4, -1, "5/8", "3/4", "1/2", "1/4", 3},
  {-4, "-90/1", -6, 3, -1, "5/8", "1/4", "-1/2", "1/4", 3},
  {-4, "-65/1", -5, 4, -1, "5/8", "3/4", "1/2", "1/4", 2},
  {-4, "-44/1", -4, 3, -1, "5/8", "1/4", "-1/2", "1/4", 2},
  {-4, "-27/1", -3, 4, -1, "5/8", "3/4", "1/2", "1/4", 1},
  {-4, "-14/1", -2, 3, -1, "5/8", "1/4", "-1/2", "1/4", 1},
  {-4, "-5/1", -1, 4, -1, "5/8", "3/4", "1/2", "1/4", 0},
  {-4, "0/1", 0, 3, -1, "5/8", "1/4", "-1/2", "1/4", 0},
  {-4, "1/1", 1, 1, 1, "3/8", "1/4", "-1/2", "-1/4", 0},
  {-4, "-2/1", 2, 2, 1, "3/8", "3/4", "1/2", "-1/4", 0},
  {-4, "-9/1", 3, 1, 1, "3/8", "1/4", "-1/2", "-1/4", 1},
  {-4, "-20/1", 4, 2, 1, "3/8", "3/4", "1/2", "-1/4", 1},
  {-4, "-35/1", 5, 1, 1, "3/8", "1/4", "-1/2", "-1/4", 2},
  {-4, "-54/1", 6, 2, 1, "3/8", "3/4", "1/2", "-1/4", 2},
  {-4, "-77/1", 7, 1, 1, "3/8", "1/4", "-1/2", "-1/4", 3},
  {-4, "-104/1", 8, 2, 1, "3/8", "3/4", "1/2", "-1/4", 3},
  {-4, "-135/1", 9, 1, 1, "3/8", "1/4", "-1/2", "-1/4", 4},
  {-4, "-170/1", 10, 2, 1, "3/8", "3/4", "1/2", "-1/4", 4},
  {-4, "-209/1", 11, 1, 1, "3/8", "1/4", "-1/2", "-1/4", 5},
  {-4, "-252/1", 12, 2, 1, "3/8", "3/4", "1/2", "-1/4", 5},
  {-4, "-299/1", 13, 1, 1, "3/8", "1/4", "-1/2", "-1/4", 6},
  {-4, "-350/1", 14, 2, 1, "3/8", "3/4", "1/2", "-1/4", 6},
  {-4, "-405/1", 15, 1, 1, "3/8", "1/4", "-1/2", "-1/4", 7},
  {-4, "-464/1", 16, 2, 1, "3/8", "3/4", "1/2", "-1/4", 7},
  {-4, "-527/1", 17, 1, 1, "3/8", "1/4", "-1/2", "-1/4", 8},
  {-4, "-594/1", 18, 2, 1, "3/8", "3/4", "1/2", "-1/4", 8},
  {-4, "-665/1", 19, 1, 1, "3/8", "1/4", "-1/2", "-1/4", 9},
  {-4, "-740/1", 20, 2, 1, "3/8", "3/4", "1/2", "-1/4", 9},
  {5, "1030/1", -20, 3, -1, "2/5", "1/4", "-1/2", "-1/5", 10},
  {5, "931/1", -19, 4, -1, "2/5", "3/4", "1/2", "-1/5", 9},
  {5, "837/1", -18, 3, -1, "2/5", "1/4", "-1/2", "-1/5", 9},
  {5, "748/1", -17, 4, -1, "2/5", "3/4", "1/2", "-1/5", 8},
  {5, "664/1", -16, 3, -1, "2/5", "1/4", "-1/2", "-1/5", 8},
  {5, "585/1", -15, 4, -1, "2/5", "3/4", "1/2", "-1/5", 7},
  {5, "511/1", -14, 3, -1, "2/5", "1/4", "-1/2", "-1/5", 7},
  {5, "442/1", -13, 4, -1, "2/5", "3/4", "1/2", "-1/5", 6},
  {5, "378/1", -12, 3, -1, "2/5", "1/4", "-1/2", "-1/5", 6},
  {5, "319/1", -11, 4, -1, "2/5", "3/4", "1/2", "-1/5", 5},
  {5, "265/1", -10, 3, -1, "2/5", "1/4", "-1/2", "-1/5", 5},
  {5, "216/1", -9, 4, -1, "2/5", "3/4", "1/2", "-1/5", 4},
  {5, "172/1", -8, 3, -1, "2/5", "1/4", "-1/2", "-1/5", 4},
  {5, "133/1", -7, 4, -1, "2/5", "3/4", "1/2", "-1/5", 3},
  {5, "99/1", -6, 3, -1, "2/5", "1/4", "-1/2", "-1/5", 3},
  {5, "70/1", -5, 4, -1, "2/5", "3/4", "1/2", "-1/5", 2},
  {5, "46/1", -4, 3, -1, "2/5", "1/4", "-1/2", "-1/5", 2},
  {5, "27/1", -3, 4, -1, "2/5", "3/4", "1/2", "-1/5", 1},
  {5, "13/1", -2, 3, -1, "2/5", "1/4", "-1/2", "-1/5", 1},
  {5, "4/1", -1, 4, -1, "2/5", "3/4", "1/2", "-1/5", 0},
  {5, "0/1", 0, 3, -1, "2/5", "1/4", "-1/2", "-1/5", 0},
  {5, "1/1", 1, 1, 1, "3/5", "1/4", "-1/2", "1/5", 0},
  {5, "7/1", 2, 2, 1, "3/5", "3/4", "1/2", "1/5", 0},
  {5, "18/1", 3, 1, 1, "3/5", "1/4", "-1/2", "1/5", 1},
  {5, "34/1", 4, 2, 1, "3/5", "3/4", "1/2", "1/5", 1},
  {5, "55/1", 5, 1, 1, "3/5", "1/4", "-1/2", "1/5", 2},
  {5, "81/1", 6, 2, 1, "3/5", "3/4", "1/2", "1/5", 2},
  {5, "112/1", 7, 1, 1, "3/5", "1/4", "-1/2", "1/5", 3},
  {5, "148/1", 8, 2, 1, "3/5", "3/4", "1/2", "1/5", 3},
  {5, "189/1", 9, 1, 1, "3/5", "1/4", "-1/2", "1/5", 4},
  {5, "235/1", 10, 2, 1, "3/5", "3/4", "1/2", "1/5", 4},
  {5, "286/1", 11, 1, 1, "3/5", "1/4", "-1/2", "1/5", 5},
  {5, "342/1", 12, 2, 1, "3/5", "3/4", "1/2", "1/5", 5},
  {5, "403/1", 13, 1, 1, "3/5", "1/4", "-1/2", "1/5", 6},
  {5, "469/1", 14, 2, 1, "3/5", "3/4", "1/2", "1/5", 6},
  {5, "540/1", 15, 1, 1, "3/5", "1/4", "-1/2", "1/5", 7},
  {5, "616/1", 16, 2, 1, "3/5", "3/4", "1/2", "1/5", 7},
  {5, "697/1", 17, 1, 1, "3/5", "1/4", "-1/2", "1/5", 8},
  {5, "783/1", 18, 2, 1, "3/5", "3/4", "1/2", "1/5", 8},
  {5, "874/1", 19, 1, 1, "3/5", "1/4", "-1/2", "1/5", 9},
  {5, "970/1", 20, 2, 1, "3/5", "3/4", "1/2", "1/5", 9},
  {-5, "-1070/1", -20, 3, -1, "3/5", "1/4", "-1/2", "1/5", 10},
  {-5, "-969/1", -19, 4, -1, "3/5", "3/4", "1/2", "1/5", 9},
  {-5, "-873/1", -18, 3, -1, "3/5", "1/4", "-1/2", "1/5", 9},
  {-5, "-782/1", -17, 4, -1, "3/5", "3/4", "1/2", "1/5", 8},
  {-5, "-696/1", -16, 3, -1, "3/5", "1/4", "-1/2", "1/5", 8},
  {-5, "-615/1", -15, 4, -1, "3/5", "3/4", "1/2", "1/5", 7},
  {-5, "-539/1", -14, 3, -1, "3/5", "1/4", "-1/2", "1/5", 7},
  {-5, "-468/1", -13, 4, -1, "3/5", "3/4", "1/2", "1/5", 6},
  {-5, "-402/1", -12, 3, -1, "3/5", "1/4", "-1/2", "1/5", 6},
  {-5, "-341/1", -11, 4, -1, "3/5", "3/4", "1/2", "1/5", 5},
  {-5, "-285/1", -10, 3, -1, "3/5", "1/4", "-1/2", "1/5", 5},
  {-5, "-234/1", -9, 4, -1, "3/5", "3/4", "1/2", "1/5", 4},
  {-5, "-188/1", -8, 3, -1, "3/5", "1/4", "-1/2", "1/5", 4},
  {-5, "-147/1", -7, 4, -1, "3/5", "3/4", "1/2", "1/5", 3},
  {-5, "-111/1", -6, 3, -1, "3/5", "1/4", "-1/2", "1/5", 3},
  {-5, "-80/1", -5, 4, -1, "3/5", "3/4", "1/2", "1/5", 2},
  {-5, "-54/1", -4, 3, -1, "3/5", "1/4", "-1/2", "1/5", 2},
  {-5, "-33/1", -3, 4, -1, "3/5", "3/4", "1/2", "1/5", 1},
  {-5, "-17/1", -2, 3, -1, "3/5", "1/4", "-1/2", "1/5", 1},
  {-5, "-6/1", -1, 4, -1, "3/5", "3/4", "1/2", "1/5", 0},
  {-5, "0/1", 0, 3, -1, "3/5", "1/4", "-1/2", "1/5", 0},
  {-5, "1/1", 1, 1, 1, "2/5", "1/4", "-1/2", "-1/5", 0},
  {-5, "-3/1", 2, 2, 1, "2/5", "3/4", "1/2", "-1/5", 0},
  {-5, "-12/1", 3, 1, 1, "2/5", "1/4", "-1/2", "-1/5", 1},
  {-5, "-26/1", 4, 2, 1, "2/5", "3/4", "1/2", "-1/5", 1},
  {-5, "-45/1", 5, 1, 1, "2/5", "1/4", "-1/2", "-1/5", 2},
  {-5, "-69/1", 6, 2, 1, "2/5", "3/4", "1/2", "-1/5", 2},
  {-5, "-98/1", 7, 1, 1, "2/5", "1/4", "-1/2", "-1/5", 3},
  {-5, "-132/1", 8, 2, 1, "2/5", "3/4", "1/2", "-1/5", 3},
  {-5, "-171/1", 9, 1, 1, "2/5", "1/4", "-1/2", "-1/5", 4},
  {-5, "-215/1", 10, 2, 1, "2/5", "3/4", "1/2", "-1/5", 4},
  {-5, "-264/1", 11, 1, 1, "2/5", "1/4", "-1/2", "-1/5", 5},
  {-5, "-318/1", 12, 2, 1, "2/5", "3/4", "1/2", "-1/5", 5},
  {-5, "-377/1", 13, 1, 1, "2/5", "1/4", "-1/2", "-1/5", 6},
  {-5, "-441/1", 14, 2, 1, "2/5", "3/4", "1/2", "-1/5", 6},
  {-5, "-510/1", 15, 1, 1, "2/5", "1/4", "-1/2", "-1/5", 7},
  {-5, "-584/1", 16, 2, 1, "2/5", "3/4", "1/2", "-1/5", 7},
  {-5, "-663/1", 17, 1, 1, "2/5", "1/4", "-1/2", "-1/5", 8},
  {-5, "-747/1", 18, 2, 1, "2/5", "3/4", "1/2", "-1/5", 8},
  {-5, "-836/1", 19, 1, 1, "2/5", "1/4", "-1/2", "-1/5", 9},
  {-5, "-930/1", 20, 2, 1, "2/5", "3/4", "1/2", "-1/5", 9},
  {7, "1450/1", -20, 3, -1, "3/7", "1/4", "-1/2", "-1/7", 10},
  {7, "1311/1", -19, 4, -1, "3/7", "3/4", "1/2", "-1/7", 9},
  {7, "1179/1", -18, 3, -1, "3/7", "1/4", "-1/2", "-1/7", 9},
  {7, "1054/1", -17, 4, -1, "3/7", "3/4", "1/2", "-1/7", 8},
  {7, "936/1", -16, 3, -1, "3/7", "1/4", "-1/2", "-1/7", 8},
  {7, "825/1", -15, 4, -1, "3/7", "3/4", "1/2", "-1/7", 7},
  {7, "721/1", -14, 3, -1, "3/7", "1/4", "-1/2", "-1/7", 7},
  {7, "624/1", -13, 4, -1, "3/7", "3/4", "1/2", "-1/7", 6},
  {7, "534/1", -12, 3, -1, "3/7", "1/4", "-1/2", "-1/7", 6},
  {7, "451/1", -11, 4, -1, "3/7", "3/4", "1/2", "-1/7", 5},
  {7, "375/1", -10, 3, -1, "3/7", "1/4", "-1/2", "-1/7", 5},
  {7, "306/1", -9, 4, -1, "3/7", "3/4", "1/2", "-1/7", 4},
  {7, "244/1", -8, 3, -1, "3/7", "1/4", "-1/2", "-1/7", 4},
  {7, "189/1", -7, 4, -1, "3/7", "3/4", "1/2", "-1/7", 3},
  {7, "141/1", -6, 3, -1, "3/7", "1/4", "-1/2", "-1/7", 3},
  {7, "100/1", -5, 4, -1, "3/7", "3/4", "1/2", "-1/7", 2},
  {7, "66/1", -4, 3, -1, "3/7", "1/4", "-1/2", "-1/7", 2},
  {7, "39/1", -3, 4, -1, "3/7", "3/4", "1/2", "-1/7", 1},
  {7, "19/1", -2, 3, -1, "3/7", "1/4", "-1/2", "-1/7", 1},
  {7, "6/1", -1, 4, -1, "3/7", "3/4", "1/2", "-1/7", 0},
  {7, "0/1", 0, 3, -1, "3/7", "1/4", "-1/2", "-1/7", 0},
  {7, "1/1", 1, 1, 1, "4/7", "1/4", "-1/2", "1/7", 0},
  {7, "9/1", 2, 2, 1, "4/7", "3/4", "1/2", "1/7", 0},
  {7, "24/1", 3, 1, 1, "4/7", "1/4", "-1/2", "1/7", 1},
  {7, "46/1", 4, 2, 1, "4/7", "3/4", "1/2", "1/7", 1},
  {7, "75/1", 5, 1, 1, "4/7", "1/4", "-1/2", "1/7", 2},
  {7, "111/1", 6, 2, 1, "4/7", "3/4", "1/2", "1/7", 2},
  {7, "154/1", 7, 1, 1, "4/7", "1/4", "-1/2", "1/7", 3},
  {7, "204/1", 8, 2, 1, "4/7", "3/4", "1/2", "1/7", 3},
  {7, "261/1", 9, 1, 1, "4/7", "1/4", "-1/2", "1/7", 4},
  {7, "325/1", 10, 2, 1, "4/7", "3/4", "1/2", "1/7", 4},
  {7, "396/1", 11, 1, 1, "4/7", "1/4", "-1/2", "1/7", 5},
  {7, "474/1", 12, 2, 1, "4/7", "3/4", "1/2", "1/7", 5},
  {7, "559/1", 13, 1, 1, "4/7", "1/4", "-1/2", "1/7", 6},
  {7, "651/1", 14, 2, 1, "4/7", "3/4", "1/2", "1/7", 6},
  {7, "750/1", 15, 1, 1, "4/7", "1/4", "-1/2", "1/7", 7},
  {7, "856/1", 16, 2, 1, "4/7", "3/4", "1/2", "1/7", 7},
  {7, "969/1", 17, 1, 1, "4/7", "1/4", "-1/2", "1/7", 8},
  {7, "1089/1", 18, 2, 1, "4/7", "3/4", "1/2", "1/7", 8},
  {7, "1216/1", 19, 1, 1, "4/7", "1/4", "-1/2", "1/7", 9},
  {7, "1350/1", 20, 2, 1, "4/7", "3/4", "1/2", "1/7", 9},
  {-7, "-1490/1", -20, 3, -1, "4/7", "1/4", "-1/2", "1/7", 10},
  {-7, "-1349/1", -19, 4, -1, "4/7", "3/4", "1/2", "1/7", 9},
  {-7, "-1215/1", -18, 3, -1, "4/7", "1/4", "-1/2", "1/7", 9},
  {-7, "-1088/1", -17, 4, -1, "4/7", "3/4", "1/2", "1/7", 8},
  {-7, "-968/1", -16, 3, -1, "4/7", "1/4", "-1/2", "1/7", 8},
  {-7, "-855/1", -15, 4, -1, "4/7", "3/4", "1/2", "1/7", 7},
  {-7, "-749/1", -14, 3, -1, "4/7", "1/4", "-1/2", "1/7", 7},
  {-7, "-650/1", -13, 4, -1, "4/7", "3/4", "1/2", "1/7", 6},
  {-7, "-558/1", -12, 3, -1, "4/7", "1/4", "-1/2", "1/7", 6},
  {-7, "-473/1", -11, 4, -1, "4/7", "3/4", "1/2", "1/7", 5},
  {-7, "-395/1", -10, 3, -1, "4/7", "1/4", "-1/2", "1/7", 5},
  {-7, "-324/1", -9, 4, -1, "4/7", "3/4", "1/2", "1/7", 4},
  {-7, "-260/1", -8, 3, -1, "4/7", "1/4", "-1/2", "1/7", 4},
  {-7, "-203/1", -7, 4, -1, "4/7", "3/4", "1/2", "1/7", 3},
  {-7, "-153/1", -6, 3, -1, "4/7", "1/4", "-1/2", "1/7", 3},
  {-7, "-110/1", -5, 4, -1, "4/7", "3/4", "1/2", "1/7", 2},
  {-7, "-74/1", -4, 3, -1, "4/7", "1/4", "-1/2", "1/7", 2},
  {-7, "-45/1", -3, 4, -1, "4/7", "3/4", "1/2", "1/7", 1},
  {-7, "-23/1", -2, 3, -1, "4/7", "1/4", "-1/2", "1/7", 1},
  {-7, "-8/1", -1, 4, -1, "4/7", "3/4", "1/2", "1/7", 0},
  {-7, "0/1", 0, 3, -1, "4/7", "1/4", "-1/2", "1/7", 0},
  {-7, "1/1", 1, 1, 1, "3/7", "1/4", "-1/2", "-1/7", 0},
  {-7, "-5/1", 2, 2, 1, "3/7", "3/4", "1/2", "-1/7", 0},
  {-7, "-18/1", 3, 1, 1, "3/7", "1/4", "-1/2", "-1/7", 1},
  {-7, "-38/1", 4, 2, 1, "3/7", "3/4", "1/2", "-1/7", 1},
  {-7, "-65/1", 5, 1, 1, "3/7", "1/4", "-1/2", "-1/7", 2},
  {-7, "-99/1", 6, 2, 1, "3/7", "3/4", "1/2", "-1/7", 2},
  {-7, "-140/1", 7, 1, 1, "3/7", "1/4", "-1/2", "-1/7", 3},
  {-7, "-188/1", 8, 2, 1, "3/7", "3/4", "1/2", "-1/7", 3},
  {-7, "-243/1", 9, 1, 1, "3/7", "1/4", "-1/2", "-1/7", 4},
  {-7, "-305/1", 10, 2, 1, "3/7", "3/4", "1/2", "-1/7", 4},
  {-7, "-374/1", 11, 1, 1, "3/7", "1/4", "-1/2", "-1/7", 5},
  {-7, "-450/1", 12, 2, 1, "3/7", "3/4", "1/2", "-1/7", 5},
  {-7, "-533/1", 13, 1, 1, "3/7", "1/4", "-1/2", "-1/7", 6},
  {-7, "-623/1", 14, 2, 1, "3/7", "3/4", "1/2", "-1/7", 6},
  {-7, "-720/1", 15, 1, 1, "3/7", "1/4", "-1/2", "-1/7", 7},
  {-7, "-824/1", 16, 2, 1, "3/7", "3/4", "1/2", "-1/7", 7},
  {-7, "-935/1", 17, 1, 1, "3/7", "1/4", "-1/2", "-1/7", 8},
  {-7, "-1053/1", 18, 2, 1, "3/7", "3/4", "1/2", "-1/7", 8},
  {-7, "-1178/1", 19, 1, 1, "3/7", "1/4", "-1/2", "-1/7", 9},
  {-7, "-1310/1", 20, 2, 1, "3/7", "3/4", "1/2", "-1/7", 9},
};

struct FiniteFixture { int k; const char* lambda; int line; };

inline constexpr FiniteFixture kFiniteGrid[] = {
  {3, "1/3", 7},
  {3, "10/3", 7},
  {3, "28/3", 7},
  {3, "55/3", 7},
  {3, "1/8", 8},
  {3, "21/8", 8},
  {3, "65/8", 8},
  {3, "133/8", 8},
  {3, "5/96", 9},
  {3, "221/96", 9},
  {3, "725/96", 9},
  {3, "1517/96", 9},
  {3, "11/600", 10},
  {3, "1271/600", 10},
  {3, "4331/600", 10},
  {3, "9191/600", 10},
  {3, "119/600", 11},
  {3, "1739/600", 11},
  {3, "5159/600", 11},
  {3, "10379/600", 11},
  {-3, "2/3", 7},
  {-3, "-7/3", 7},
  {-3, "-25/3", 7},
  {-3, "-52/3", 7},
  {-3, "7/8", 12},
  {-3, "-13/8", 12},
  {-3, "-57/8", 12},
  {-3, "-125/8", 12},
  {-3, "91/96", 13},
  {-3, "-125/96", 13},
  {-3, "-629/96", 13},
  {-3, "-1421/96", 13},
  {-3, "589/600", 14},
  {-3, "-671/600", 14},
  {-3, "-3731/600", 14},
  {-3, "-8591/600", 14},
  {-3, "481/600", 15},
  {-3, "-1139/600", 15},
  {-3, "-4559/600", 15},
  {-3, "-9779/600", 15},
  {4, "3/8", 7},
  {4, "35/8", 7},
  {4, "99/8", 7},
  {4, "195/8", 7},
  {4, "7/72", 16},
  {4, "247/72", 16},
  {4, "775/72", 16},
  {4, "1591/72", 16},
  {-4, "5/8", 7},
  {-4, "-27/8", 7},
  {-4, "-91/8", 7},
  {-4, "-187/8", 7},
  {-4, "65/72", 17},
  {-4, "-175/72", 17},
  {-4, "-703/72", 17},
  {-4, "-1519/72", 17},
  {5, "2/5", 7},
  {5, "27/5", 7},
  {5, "77/5", 7},
  {5, "152/5", 7},
  {5, "19/360", 18},
  {5, "1519/360", 18},
  {5, "4819/360", 18},
  {5, "9919/360", 18},
  {5, "7/40", 19},
  {5, "187/40", 19},
  {5, "567/40", 19},
  {5, "1147/40", 19},
  {-5, "3/5", 7},
  {-5, "-22/5", 7},
  {-5, "-72/5", 7},
  {-5, "-147/5", 7},
  {-5, "341/360", 20},
  {-5, "-1159/360", 20},
  {-5, "-4459/360", 20},
  {-5, "-9559/360", 20},
  {-5, "33/40", 21},
  {-5, "-147/40", 21},
  {-5, "-527/40", 21},
  {-5, "-1107/40", 21},
  {7, "3/7", 7},
  {7, "52/7", 7},
  {7, "150/7", 7},
  {7, "297/7", 7},
  {-7, "4/7", 7},
  {-7, "-45/7", 7},
  {-7, "-143/7", 7},
  {-7, "-290/7", 7},
};

struct NotInTableFixture { int k; const char* lambda; };

inline constexpr NotInTableFixture kNotInTable[] = {
  {5, "2/1"},
  {3, "2/5"},
  {-3, "1/3"},
  {7, "1/2"},
  {4, "5/7"},
  {-5, "1/2"},
};
