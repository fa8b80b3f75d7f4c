// Generated by scripts/gen_lebedev.py -- do not edit by hand.
// Lebedev rules on the unit sphere; weights sum to 4*pi.

#include "floquet/lebedev.hpp"

namespace flq::detail {

static const double kLeb3[6][4] = {
    {1.0, 0.0, 0.0, 2.094395102393196},
    {-1.0, 0.0, 0.0, 2.094395102393196},
    {0.0, 1.0, 0.0, 2.094395102393196},
    {0.0, -1.0, 0.0, 2.094395102393196},
    {0.0, 0.0, 1.0, 2.094395102393196},
    {0.0, 0.0, -1.0, 2.094395102393196},
};

static const double kLeb5[14][4] = {
    {1.0, 0.0, 0.0, 0.8377580409572781},
    {-1.0, 0.0, 0.0, 0.8377580409572781},
    {0.0, 1.0, 0.0, 0.8377580409572781},
    {0.0, -1.0, 0.0, 0.8377580409572781},
    {0.0, 0.0, 1.0, 0.8377580409572781},
    {0.0, 0.0, -1.0, 0.8377580409572781},
    {0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.9424777960769379},
    {-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.9424777960769379},
    {0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.9424777960769379},
    {0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.9424777960769379},
    {-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.9424777960769379},
    {0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.9424777960769379},
    {-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.9424777960769379},
    {-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.9424777960769379},
};

static const double kLeb7[26][4] = {
    {1.0, 0.0, 0.0, 0.5983986006837702},
    {-1.0, 0.0, 0.0, 0.5983986006837702},
    {0.0, 1.0, 0.0, 0.5983986006837702},
    {0.0, -1.0, 0.0, 0.5983986006837702},
    {0.0, 0.0, 1.0, 0.5983986006837702},
    {0.0, 0.0, -1.0, 0.5983986006837702},
    {0.0, 0.7071067811865476, 0.7071067811865476, 0.4787188805470161},
    {0.0, -0.7071067811865476, 0.7071067811865476, 0.4787188805470161},
    {0.0, 0.7071067811865476, -0.7071067811865476, 0.4787188805470161},
    {0.0, -0.7071067811865476, -0.7071067811865476, 0.4787188805470161},
    {0.7071067811865476, 0.0, 0.7071067811865476, 0.4787188805470161},
    {0.7071067811865476, 0.0, -0.7071067811865476, 0.4787188805470161},
    {-0.7071067811865476, 0.0, 0.7071067811865476, 0.4787188805470161},
    {-0.7071067811865476, 0.0, -0.7071067811865476, 0.4787188805470161},
    {0.7071067811865476, 0.7071067811865476, 0.0, 0.4787188805470161},
    {-0.7071067811865476, 0.7071067811865476, 0.0, 0.4787188805470161},
    {0.7071067811865476, -0.7071067811865476, 0.0, 0.4787188805470161},
    {-0.7071067811865476, -0.7071067811865476, 0.0, 0.4787188805470161},
    {0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.4039190554615448},
    {-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.4039190554615448},
    {0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.4039190554615448},
    {0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.4039190554615448},
    {-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.4039190554615448},
    {0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.4039190554615448},
    {-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.4039190554615448},
    {-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.4039190554615448},
};

static const double kLeb9[38][4] = {
    {1.0, 0.0, 0.0, 0.11967972013675403},
    {-1.0, 0.0, 0.0, 0.11967972013675403},
    {0.0, 1.0, 0.0, 0.11967972013675403},
    {0.0, -1.0, 0.0, 0.11967972013675403},
    {0.0, 0.0, 1.0, 0.11967972013675403},
    {0.0, 0.0, -1.0, 0.11967972013675403},
    {0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.4039190554615448},
    {-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.4039190554615448},
    {0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.4039190554615448},
    {0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.4039190554615448},
    {-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.4039190554615448},
    {0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.4039190554615448},
    {-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.4039190554615448},
    {-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.4039190554615448},
    {0.4597008433809831, 0.8880738339771153, 0.0, 0.35903916041026207},
    {-0.4597008433809831, 0.8880738339771153, 0.0, 0.35903916041026207},
    {0.4597008433809831, -0.8880738339771153, 0.0, 0.35903916041026207},
    {-0.4597008433809831, -0.8880738339771153, 0.0, 0.35903916041026207},
    {0.8880738339771153, 0.4597008433809831, 0.0, 0.35903916041026207},
    {-0.8880738339771153, 0.4597008433809831, 0.0, 0.35903916041026207},
    {0.8880738339771153, -0.4597008433809831, 0.0, 0.35903916041026207},
    {-0.8880738339771153, -0.4597008433809831, 0.0, 0.35903916041026207},
    {0.4597008433809831, 0.0, 0.8880738339771153, 0.35903916041026207},
    {-0.4597008433809831, 0.0, 0.8880738339771153, 0.35903916041026207},
    {0.4597008433809831, 0.0, -0.8880738339771153, 0.35903916041026207},
    {-0.4597008433809831, 0.0, -0.8880738339771153, 0.35903916041026207},
    {0.8880738339771153, 0.0, 0.4597008433809831, 0.35903916041026207},
    {-0.8880738339771153, 0.0, 0.4597008433809831, 0.35903916041026207},
    {0.8880738339771153, 0.0, -0.4597008433809831, 0.35903916041026207},
    {-0.8880738339771153, 0.0, -0.4597008433809831, 0.35903916041026207},
    {0.0, 0.4597008433809831, 0.8880738339771153, 0.35903916041026207},
    {0.0, -0.4597008433809831, 0.8880738339771153, 0.35903916041026207},
    {0.0, 0.4597008433809831, -0.8880738339771153, 0.35903916041026207},
    {0.0, -0.4597008433809831, -0.8880738339771153, 0.35903916041026207},
    {0.0, 0.8880738339771153, 0.4597008433809831, 0.35903916041026207},
    {0.0, -0.8880738339771153, 0.4597008433809831, 0.35903916041026207},
    {0.0, 0.8880738339771153, -0.4597008433809831, 0.35903916041026207},
    {0.0, -0.8880738339771153, -0.4597008433809831, 0.35903916041026207},
};

static const double kLeb11[50][4] = {
    {1.0, 0.0, 0.0, 0.1595729601823387},
    {-1.0, 0.0, 0.0, 0.1595729601823387},
    {0.0, 1.0, 0.0, 0.1595729601823387},
    {0.0, -1.0, 0.0, 0.1595729601823387},
    {0.0, 0.0, 1.0, 0.1595729601823387},
    {0.0, 0.0, -1.0, 0.1595729601823387},
    {0.0, 0.7071067811865476, 0.7071067811865476, 0.2836852625463799},
    {0.0, -0.7071067811865476, 0.7071067811865476, 0.2836852625463799},
    {0.0, 0.7071067811865476, -0.7071067811865476, 0.2836852625463799},
    {0.0, -0.7071067811865476, -0.7071067811865476, 0.2836852625463799},
    {0.7071067811865476, 0.0, 0.7071067811865476, 0.2836852625463799},
    {0.7071067811865476, 0.0, -0.7071067811865476, 0.2836852625463799},
    {-0.7071067811865476, 0.0, 0.7071067811865476, 0.2836852625463799},
    {-0.7071067811865476, 0.0, -0.7071067811865476, 0.2836852625463799},
    {0.7071067811865476, 0.7071067811865476, 0.0, 0.2836852625463799},
    {-0.7071067811865476, 0.7071067811865476, 0.0, 0.2836852625463799},
    {0.7071067811865476, -0.7071067811865476, 0.0, 0.2836852625463799},
    {-0.7071067811865476, -0.7071067811865476, 0.0, 0.2836852625463799},
    {0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.2650718801466388},
    {-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.2650718801466388},
    {0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.2650718801466388},
    {0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.2650718801466388},
    {-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.2650718801466388},
    {0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.2650718801466388},
    {-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.2650718801466388},
    {-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.2650718801466388},
    {0.3015113445777636, 0.3015113445777636, 0.9045340337332909, 0.2535056108973113},
    {-0.3015113445777636, 0.3015113445777636, 0.9045340337332909, 0.2535056108973113},
    {0.3015113445777636, -0.3015113445777636, 0.9045340337332909, 0.2535056108973113},
    {0.3015113445777636, 0.3015113445777636, -0.9045340337332909, 0.2535056108973113},
    {-0.3015113445777636, -0.3015113445777636, 0.9045340337332909, 0.2535056108973113},
    {-0.3015113445777636, 0.3015113445777636, -0.9045340337332909, 0.2535056108973113},
    {0.3015113445777636, -0.3015113445777636, -0.9045340337332909, 0.2535056108973113},
    {-0.3015113445777636, -0.3015113445777636, -0.9045340337332909, 0.2535056108973113},
    {-0.3015113445777636, 0.9045340337332909, 0.3015113445777636, 0.2535056108973113},
    {0.3015113445777636, -0.9045340337332909, 0.3015113445777636, 0.2535056108973113},
    {0.3015113445777636, 0.9045340337332909, -0.3015113445777636, 0.2535056108973113},
    {-0.3015113445777636, -0.9045340337332909, 0.3015113445777636, 0.2535056108973113},
    {-0.3015113445777636, 0.9045340337332909, -0.3015113445777636, 0.2535056108973113},
    {0.3015113445777636, -0.9045340337332909, -0.3015113445777636, 0.2535056108973113},
    {-0.3015113445777636, -0.9045340337332909, -0.3015113445777636, 0.2535056108973113},
    {0.3015113445777636, 0.9045340337332909, 0.3015113445777636, 0.2535056108973113},
    {0.9045340337332909, 0.3015113445777636, 0.3015113445777636, 0.2535056108973113},
    {-0.9045340337332909, 0.3015113445777636, 0.3015113445777636, 0.2535056108973113},
    {0.9045340337332909, -0.3015113445777636, 0.3015113445777636, 0.2535056108973113},
    {0.9045340337332909, 0.3015113445777636, -0.3015113445777636, 0.2535056108973113},
    {-0.9045340337332909, -0.3015113445777636, 0.3015113445777636, 0.2535056108973113},
    {-0.9045340337332909, 0.3015113445777636, -0.3015113445777636, 0.2535056108973113},
    {0.9045340337332909, -0.3015113445777636, -0.3015113445777636, 0.2535056108973113},
    {-0.9045340337332909, -0.3015113445777636, -0.3015113445777636, 0.2535056108973113},
};

static const double kLeb13[74][4] = {
    {1.0, 0.0, 0.0, 0.006447392330599543},
    {-1.0, 0.0, 0.0, 0.006447392330599543},
    {0.0, 1.0, 0.0, 0.006447392330599543},
    {0.0, -1.0, 0.0, 0.006447392330599543},
    {0.0, 0.0, 1.0, 0.006447392330599543},
    {0.0, 0.0, -1.0, 0.006447392330599543},
    {0.0, 0.7071067811865476, 0.7071067811865476, 0.20865289186971622},
    {0.0, -0.7071067811865476, 0.7071067811865476, 0.20865289186971622},
    {0.0, 0.7071067811865476, -0.7071067811865476, 0.20865289186971622},
    {0.0, -0.7071067811865476, -0.7071067811865476, 0.20865289186971622},
    {0.7071067811865476, 0.0, 0.7071067811865476, 0.20865289186971622},
    {0.7071067811865476, 0.0, -0.7071067811865476, 0.20865289186971622},
    {-0.7071067811865476, 0.0, 0.7071067811865476, 0.20865289186971622},
    {-0.7071067811865476, 0.0, -0.7071067811865476, 0.20865289186971622},
    {0.7071067811865476, 0.7071067811865476, 0.0, 0.20865289186971622},
    {-0.7071067811865476, 0.7071067811865476, 0.0, 0.20865289186971622},
    {0.7071067811865476, -0.7071067811865476, 0.0, 0.20865289186971622},
    {-0.7071067811865476, -0.7071067811865476, 0.0, 0.20865289186971622},
    {0.5773502691896257, 0.5773502691896257, 0.5773502691896257, -0.37178913059528557},
    {-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, -0.37178913059528557},
    {0.5773502691896257, -0.5773502691896257, 0.5773502691896257, -0.37178913059528557},
    {0.5773502691896257, 0.5773502691896257, -0.5773502691896257, -0.37178913059528557},
    {-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, -0.37178913059528557},
    {0.5773502691896257, -0.5773502691896257, -0.5773502691896257, -0.37178913059528557},
    {-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, -0.37178913059528557},
    {-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, -0.37178913059528557},
    {0.4803844614152614, 0.4803844614152614, 0.7337993857053428, 0.3339664677183728},
    {-0.4803844614152614, 0.4803844614152614, 0.7337993857053428, 0.3339664677183728},
    {0.4803844614152614, -0.4803844614152614, 0.7337993857053428, 0.3339664677183728},
    {0.4803844614152614, 0.4803844614152614, -0.7337993857053428, 0.3339664677183728},
    {-0.4803844614152614, -0.4803844614152614, 0.7337993857053428, 0.3339664677183728},
    {-0.4803844614152614, 0.4803844614152614, -0.7337993857053428, 0.3339664677183728},
    {0.4803844614152614, -0.4803844614152614, -0.7337993857053428, 0.3339664677183728},
    {-0.4803844614152614, -0.4803844614152614, -0.7337993857053428, 0.3339664677183728},
    {-0.4803844614152614, 0.7337993857053428, 0.4803844614152614, 0.3339664677183728},
    {0.4803844614152614, -0.7337993857053428, 0.4803844614152614, 0.3339664677183728},
    {0.4803844614152614, 0.7337993857053428, -0.4803844614152614, 0.3339664677183728},
    {-0.4803844614152614, -0.7337993857053428, 0.4803844614152614, 0.3339664677183728},
    {-0.4803844614152614, 0.7337993857053428, -0.4803844614152614, 0.3339664677183728},
    {0.4803844614152614, -0.7337993857053428, -0.4803844614152614, 0.3339664677183728},
    {-0.4803844614152614, -0.7337993857053428, -0.4803844614152614, 0.3339664677183728},
    {0.4803844614152614, 0.7337993857053428, 0.4803844614152614, 0.3339664677183728},
    {0.7337993857053428, 0.4803844614152614, 0.4803844614152614, 0.3339664677183728},
    {-0.7337993857053428, 0.4803844614152614, 0.4803844614152614, 0.3339664677183728},
    {0.7337993857053428, -0.4803844614152614, 0.4803844614152614, 0.3339664677183728},
    {0.7337993857053428, 0.4803844614152614, -0.4803844614152614, 0.3339664677183728},
    {-0.7337993857053428, -0.4803844614152614, 0.4803844614152614, 0.3339664677183728},
    {-0.7337993857053428, 0.4803844614152614, -0.4803844614152614, 0.3339664677183728},
    {0.7337993857053428, -0.4803844614152614, -0.4803844614152614, 0.3339664677183728},
    {-0.7337993857053428, -0.4803844614152614, -0.4803844614152614, 0.3339664677183728},
    {0.3207726489807764, 0.9471562213625879, 0.0, 0.2076237240608466},
    {-0.3207726489807764, 0.9471562213625879, 0.0, 0.2076237240608466},
    {0.3207726489807764, -0.9471562213625879, 0.0, 0.2076237240608466},
    {-0.3207726489807764, -0.9471562213625879, 0.0, 0.2076237240608466},
    {0.9471562213625879, 0.3207726489807764, 0.0, 0.2076237240608466},
    {-0.9471562213625879, 0.3207726489807764, 0.0, 0.2076237240608466},
    {0.9471562213625879, -0.3207726489807764, 0.0, 0.2076237240608466},
    {-0.9471562213625879, -0.3207726489807764, 0.0, 0.2076237240608466},
    {0.3207726489807764, 0.0, 0.9471562213625879, 0.2076237240608466},
    {-0.3207726489807764, 0.0, 0.9471562213625879, 0.2076237240608466},
    {0.3207726489807764, 0.0, -0.9471562213625879, 0.2076237240608466},
    {-0.3207726489807764, 0.0, -0.9471562213625879, 0.2076237240608466},
    {0.9471562213625879, 0.0, 0.3207726489807764, 0.2076237240608466},
    {-0.9471562213625879, 0.0, 0.3207726489807764, 0.2076237240608466},
    {0.9471562213625879, 0.0, -0.3207726489807764, 0.2076237240608466},
    {-0.9471562213625879, 0.0, -0.3207726489807764, 0.2076237240608466},
    {0.0, 0.3207726489807764, 0.9471562213625879, 0.2076237240608466},
    {0.0, -0.3207726489807764, 0.9471562213625879, 0.2076237240608466},
    {0.0, 0.3207726489807764, -0.9471562213625879, 0.2076237240608466},
    {0.0, -0.3207726489807764, -0.9471562213625879, 0.2076237240608466},
    {0.0, 0.9471562213625879, 0.3207726489807764, 0.2076237240608466},
    {0.0, -0.9471562213625879, 0.3207726489807764, 0.2076237240608466},
    {0.0, 0.9471562213625879, -0.3207726489807764, 0.2076237240608466},
    {0.0, -0.9471562213625879, -0.3207726489807764, 0.2076237240608466},
};

static const double kLeb15[86][4] = {
    {1.0, 0.0, 0.0, 0.14506632743848968},
    {-1.0, 0.0, 0.0, 0.14506632743848968},
    {0.0, 1.0, 0.0, 0.14506632743848968},
    {0.0, -1.0, 0.0, 0.14506632743848968},
    {0.0, 0.0, 1.0, 0.14506632743848968},
    {0.0, 0.0, -1.0, 0.14506632743848968},
    {0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.15009158815708187},
    {-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.15009158815708187},
    {0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.15009158815708187},
    {0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.15009158815708187},
    {-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.15009158815708187},
    {0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.15009158815708187},
    {-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.15009158815708187},
    {-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.15009158815708187},
    {0.3696028464541502, 0.3696028464541502, 0.8525183117012676, 0.13961936079092707},
    {-0.3696028464541502, 0.3696028464541502, 0.8525183117012676, 0.13961936079092707},
    {0.3696028464541502, -0.3696028464541502, 0.8525183117012676, 0.13961936079092707},
    {0.3696028464541502, 0.3696028464541502, -0.8525183117012676, 0.13961936079092707},
    {-0.3696028464541502, -0.3696028464541502, 0.8525183117012676, 0.13961936079092707},
    {-0.3696028464541502, 0.3696028464541502, -0.8525183117012676, 0.13961936079092707},
    {0.3696028464541502, -0.3696028464541502, -0.8525183117012676, 0.13961936079092707},
    {-0.3696028464541502, -0.3696028464541502, -0.8525183117012676, 0.13961936079092707},
    {-0.3696028464541502, 0.8525183117012676, 0.3696028464541502, 0.13961936079092707},
    {0.3696028464541502, -0.8525183117012676, 0.3696028464541502, 0.13961936079092707},
    {0.3696028464541502, 0.8525183117012676, -0.3696028464541502, 0.13961936079092707},
    {-0.3696028464541502, -0.8525183117012676, 0.3696028464541502, 0.13961936079092707},
    {-0.3696028464541502, 0.8525183117012676, -0.3696028464541502, 0.13961936079092707},
    {0.3696028464541502, -0.8525183117012676, -0.3696028464541502, 0.13961936079092707},
    {-0.3696028464541502, -0.8525183117012676, -0.3696028464541502, 0.13961936079092707},
    {0.3696028464541502, 0.8525183117012676, 0.3696028464541502, 0.13961936079092707},
    {0.8525183117012676, 0.3696028464541502, 0.3696028464541502, 0.13961936079092707},
    {-0.8525183117012676, 0.3696028464541502, 0.3696028464541502, 0.13961936079092707},
    {0.8525183117012676, -0.3696028464541502, 0.3696028464541502, 0.13961936079092707},
    {0.8525183117012676, 0.3696028464541502, -0.3696028464541502, 0.13961936079092707},
    {-0.8525183117012676, -0.3696028464541502, 0.3696028464541502, 0.13961936079092707},
    {-0.8525183117012676, 0.3696028464541502, -0.3696028464541502, 0.13961936079092707},
    {0.8525183117012676, -0.3696028464541502, -0.3696028464541502, 0.13961936079092707},
    {-0.8525183117012676, -0.3696028464541502, -0.3696028464541502, 0.13961936079092707},
    {0.6943540066026664, 0.6943540066026664, 0.18906355288539498, 0.1492445168690702},
    {-0.6943540066026664, 0.6943540066026664, 0.18906355288539498, 0.1492445168690702},
    {0.6943540066026664, -0.6943540066026664, 0.18906355288539498, 0.1492445168690702},
    {0.6943540066026664, 0.6943540066026664, -0.18906355288539498, 0.1492445168690702},
    {-0.6943540066026664, -0.6943540066026664, 0.18906355288539498, 0.1492445168690702},
    {-0.6943540066026664, 0.6943540066026664, -0.18906355288539498, 0.1492445168690702},
    {0.6943540066026664, -0.6943540066026664, -0.18906355288539498, 0.1492445168690702},
    {-0.6943540066026664, -0.6943540066026664, -0.18906355288539498, 0.1492445168690702},
    {-0.6943540066026664, 0.18906355288539498, 0.6943540066026664, 0.1492445168690702},
    {0.6943540066026664, -0.18906355288539498, 0.6943540066026664, 0.1492445168690702},
    {0.6943540066026664, 0.18906355288539498, -0.6943540066026664, 0.1492445168690702},
    {-0.6943540066026664, -0.18906355288539498, 0.6943540066026664, 0.1492445168690702},
    {-0.6943540066026664, 0.18906355288539498, -0.6943540066026664, 0.1492445168690702},
    {0.6943540066026664, -0.18906355288539498, -0.6943540066026664, 0.1492445168690702},
    {-0.6943540066026664, -0.18906355288539498, -0.6943540066026664, 0.1492445168690702},
    {0.6943540066026664, 0.18906355288539498, 0.6943540066026664, 0.1492445168690702},
    {0.18906355288539498, 0.6943540066026664, 0.6943540066026664, 0.1492445168690702},
    {-0.18906355288539498, 0.6943540066026664, 0.6943540066026664, 0.1492445168690702},
    {0.18906355288539498, -0.6943540066026664, 0.6943540066026664, 0.1492445168690702},
    {0.18906355288539498, 0.6943540066026664, -0.6943540066026664, 0.1492445168690702},
    {-0.18906355288539498, -0.6943540066026664, 0.6943540066026664, 0.1492445168690702},
    {-0.18906355288539498, 0.6943540066026664, -0.6943540066026664, 0.1492445168690702},
    {0.18906355288539498, -0.6943540066026664, -0.6943540066026664, 0.1492445168690702},
    {-0.18906355288539498, -0.6943540066026664, -0.6943540066026664, 0.1492445168690702},
    {0.3742430390903412, 0.9273306571511725, 0.0, 0.1484377866929852},
    {-0.3742430390903412, 0.9273306571511725, 0.0, 0.1484377866929852},
    {0.3742430390903412, -0.9273306571511725, 0.0, 0.1484377866929852},
    {-0.3742430390903412, -0.9273306571511725, 0.0, 0.1484377866929852},
    {0.9273306571511725, 0.3742430390903412, 0.0, 0.1484377866929852},
    {-0.9273306571511725, 0.3742430390903412, 0.0, 0.1484377866929852},
    {0.9273306571511725, -0.3742430390903412, 0.0, 0.1484377866929852},
    {-0.9273306571511725, -0.3742430390903412, 0.0, 0.1484377866929852},
    {0.3742430390903412, 0.0, 0.9273306571511725, 0.1484377866929852},
    {-0.3742430390903412, 0.0, 0.9273306571511725, 0.1484377866929852},
    {0.3742430390903412, 0.0, -0.9273306571511725, 0.1484377866929852},
    {-0.3742430390903412, 0.0, -0.9273306571511725, 0.1484377866929852},
    {0.9273306571511725, 0.0, 0.3742430390903412, 0.1484377866929852},
    {-0.9273306571511725, 0.0, 0.3742430390903412, 0.1484377866929852},
    {0.9273306571511725, 0.0, -0.3742430390903412, 0.1484377866929852},
    {-0.9273306571511725, 0.0, -0.3742430390903412, 0.1484377866929852},
    {0.0, 0.3742430390903412, 0.9273306571511725, 0.1484377866929852},
    {0.0, -0.3742430390903412, 0.9273306571511725, 0.1484377866929852},
    {0.0, 0.3742430390903412, -0.9273306571511725, 0.1484377866929852},
    {0.0, -0.3742430390903412, -0.9273306571511725, 0.1484377866929852},
    {0.0, 0.9273306571511725, 0.3742430390903412, 0.1484377866929852},
    {0.0, -0.9273306571511725, 0.3742430390903412, 0.1484377866929852},
    {0.0, 0.9273306571511725, -0.3742430390903412, 0.1484377866929852},
    {0.0, -0.9273306571511725, -0.3742430390903412, 0.1484377866929852},
};

static const double kLeb17[110][4] = {
    {1.0, 0.0, 0.0, 0.048107465851396594},
    {-1.0, 0.0, 0.0, 0.048107465851396594},
    {0.0, 1.0, 0.0, 0.048107465851396594},
    {0.0, -1.0, 0.0, 0.048107465851396594},
    {0.0, 0.0, 1.0, 0.048107465851396594},
    {0.0, 0.0, -1.0, 0.048107465851396594},
    {0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.12307173528167017},
    {-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.12307173528167017},
    {0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.12307173528167017},
    {0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.12307173528167017},
    {-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.12307173528167017},
    {0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.12307173528167017},
    {-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.12307173528167017},
    {-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.12307173528167017},
    {0.1851156353447362, 0.1851156353447362, 0.9651240350865941, 0.1031917340883304},
    {-0.1851156353447362, 0.1851156353447362, 0.9651240350865941, 0.1031917340883304},
    {0.1851156353447362, -0.1851156353447362, 0.9651240350865941, 0.1031917340883304},
    {0.1851156353447362, 0.1851156353447362, -0.9651240350865941, 0.1031917340883304},
    {-0.1851156353447362, -0.1851156353447362, 0.9651240350865941, 0.1031917340883304},
    {-0.1851156353447362, 0.1851156353447362, -0.9651240350865941, 0.1031917340883304},
    {0.1851156353447362, -0.1851156353447362, -0.9651240350865941, 0.1031917340883304},
    {-0.1851156353447362, -0.1851156353447362, -0.9651240350865941, 0.1031917340883304},
    {-0.1851156353447362, 0.9651240350865941, 0.1851156353447362, 0.1031917340883304},
    {0.1851156353447362, -0.9651240350865941, 0.1851156353447362, 0.1031917340883304},
    {0.1851156353447362, 0.9651240350865941, -0.1851156353447362, 0.1031917340883304},
    {-0.1851156353447362, -0.9651240350865941, 0.1851156353447362, 0.1031917340883304},
    {-0.1851156353447362, 0.9651240350865941, -0.1851156353447362, 0.1031917340883304},
    {0.1851156353447362, -0.9651240350865941, -0.1851156353447362, 0.1031917340883304},
    {-0.1851156353447362, -0.9651240350865941, -0.1851156353447362, 0.1031917340883304},
    {0.1851156353447362, 0.9651240350865941, 0.1851156353447362, 0.1031917340883304},
    {0.9651240350865941, 0.1851156353447362, 0.1851156353447362, 0.1031917340883304},
    {-0.9651240350865941, 0.1851156353447362, 0.1851156353447362, 0.1031917340883304},
    {0.9651240350865941, -0.1851156353447362, 0.1851156353447362, 0.1031917340883304},
    {0.9651240350865941, 0.1851156353447362, -0.1851156353447362, 0.1031917340883304},
    {-0.9651240350865941, -0.1851156353447362, 0.1851156353447362, 0.1031917340883304},
    {-0.9651240350865941, 0.1851156353447362, -0.1851156353447362, 0.1031917340883304},
    {0.9651240350865941, -0.1851156353447362, -0.1851156353447362, 0.1031917340883304},
    {-0.9651240350865941, -0.1851156353447362, -0.1851156353447362, 0.1031917340883304},
    {0.6904210483822922, 0.6904210483822922, 0.21595729184584844, 0.1249450968725133},
    {-0.6904210483822922, 0.6904210483822922, 0.21595729184584844, 0.1249450968725133},
    {0.6904210483822922, -0.6904210483822922, 0.21595729184584844, 0.1249450968725133},
    {0.6904210483822922, 0.6904210483822922, -0.21595729184584844, 0.1249450968725133},
    {-0.6904210483822922, -0.6904210483822922, 0.21595729184584844, 0.1249450968725133},
    {-0.6904210483822922, 0.6904210483822922, -0.21595729184584844, 0.1249450968725133},
    {0.6904210483822922, -0.6904210483822922, -0.21595729184584844, 0.1249450968725133},
    {-0.6904210483822922, -0.6904210483822922, -0.21595729184584844, 0.1249450968725133},
    {-0.6904210483822922, 0.21595729184584844, 0.6904210483822922, 0.1249450968725133},
    {0.6904210483822922, -0.21595729184584844, 0.6904210483822922, 0.1249450968725133},
    {0.6904210483822922, 0.21595729184584844, -0.6904210483822922, 0.1249450968725133},
    {-0.6904210483822922, -0.21595729184584844, 0.6904210483822922, 0.1249450968725133},
    {-0.6904210483822922, 0.21595729184584844, -0.6904210483822922, 0.1249450968725133},
    {0.6904210483822922, -0.21595729184584844, -0.6904210483822922, 0.1249450968725133},
    {-0.6904210483822922, -0.21595729184584844, -0.6904210483822922, 0.1249450968725133},
    {0.6904210483822922, 0.21595729184584844, 0.6904210483822922, 0.1249450968725133},
    {0.21595729184584844, 0.6904210483822922, 0.6904210483822922, 0.1249450968725133},
    {-0.21595729184584844, 0.6904210483822922, 0.6904210483822922, 0.1249450968725133},
    {0.21595729184584844, -0.6904210483822922, 0.6904210483822922, 0.1249450968725133},
    {0.21595729184584844, 0.6904210483822922, -0.6904210483822922, 0.1249450968725133},
    {-0.21595729184584844, -0.6904210483822922, 0.6904210483822922, 0.1249450968725133},
    {-0.21595729184584844, 0.6904210483822922, -0.6904210483822922, 0.1249450968725133},
    {0.21595729184584844, -0.6904210483822922, -0.6904210483822922, 0.1249450968725133},
    {-0.21595729184584844, -0.6904210483822922, -0.6904210483822922, 0.1249450968725133},
    {0.3956894730559419, 0.3956894730559419, 0.8287699812525923, 0.12058024902852789},
    {-0.3956894730559419, 0.3956894730559419, 0.8287699812525923, 0.12058024902852789},
    {0.3956894730559419, -0.3956894730559419, 0.8287699812525923, 0.12058024902852789},
    {0.3956894730559419, 0.3956894730559419, -0.8287699812525923, 0.12058024902852789},
    {-0.3956894730559419, -0.3956894730559419, 0.8287699812525923, 0.12058024902852789},
    {-0.3956894730559419, 0.3956894730559419, -0.8287699812525923, 0.12058024902852789},
    {0.3956894730559419, -0.3956894730559419, -0.8287699812525923, 0.12058024902852789},
    {-0.3956894730559419, -0.3956894730559419, -0.8287699812525923, 0.12058024902852789},
    {-0.3956894730559419, 0.8287699812525923, 0.3956894730559419, 0.12058024902852789},
    {0.3956894730559419, -0.8287699812525923, 0.3956894730559419, 0.12058024902852789},
    {0.3956894730559419, 0.8287699812525923, -0.3956894730559419, 0.12058024902852789},
    {-0.3956894730559419, -0.8287699812525923, 0.3956894730559419, 0.12058024902852789},
    {-0.3956894730559419, 0.8287699812525923, -0.3956894730559419, 0.12058024902852789},
    {0.3956894730559419, -0.8287699812525923, -0.3956894730559419, 0.12058024902852789},
    {-0.3956894730559419, -0.8287699812525923, -0.3956894730559419, 0.12058024902852789},
    {0.3956894730559419, 0.8287699812525923, 0.3956894730559419, 0.12058024902852789},
    {0.8287699812525923, 0.3956894730559419, 0.3956894730559419, 0.12058024902852789},
    {-0.8287699812525923, 0.3956894730559419, 0.3956894730559419, 0.12058024902852789},
    {0.8287699812525923, -0.3956894730559419, 0.3956894730559419, 0.12058024902852789},
    {0.8287699812525923, 0.3956894730559419, -0.3956894730559419, 0.12058024902852789},
    {-0.8287699812525923, -0.3956894730559419, 0.3956894730559419, 0.12058024902852789},
    {-0.8287699812525923, 0.3956894730559419, -0.3956894730559419, 0.12058024902852789},
    {0.8287699812525923, -0.3956894730559419, -0.3956894730559419, 0.12058024902852789},
    {-0.8287699812525923, -0.3956894730559419, -0.3956894730559419, 0.12058024902852789},
    {0.4783690288121502, 0.8781589106040661, 0.0, 0.12183091738552138},
    {-0.4783690288121502, 0.8781589106040661, 0.0, 0.12183091738552138},
    {0.4783690288121502, -0.8781589106040661, 0.0, 0.12183091738552138},
    {-0.4783690288121502, -0.8781589106040661, 0.0, 0.12183091738552138},
    {0.8781589106040661, 0.4783690288121502, 0.0, 0.12183091738552138},
    {-0.8781589106040661, 0.4783690288121502, 0.0, 0.12183091738552138},
    {0.8781589106040661, -0.4783690288121502, 0.0, 0.12183091738552138},
    {-0.8781589106040661, -0.4783690288121502, 0.0, 0.12183091738552138},
    {0.4783690288121502, 0.0, 0.8781589106040661, 0.12183091738552138},
    {-0.4783690288121502, 0.0, 0.8781589106040661, 0.12183091738552138},
    {0.4783690288121502, 0.0, -0.8781589106040661, 0.12183091738552138},
    {-0.4783690288121502, 0.0, -0.8781589106040661, 0.12183091738552138},
    {0.8781589106040661, 0.0, 0.4783690288121502, 0.12183091738552138},
    {-0.8781589106040661, 0.0, 0.4783690288121502, 0.12183091738552138},
    {0.8781589106040661, 0.0, -0.4783690288121502, 0.12183091738552138},
    {-0.8781589106040661, 0.0, -0.4783690288121502, 0.12183091738552138},
    {0.0, 0.4783690288121502, 0.8781589106040661, 0.12183091738552138},
    {0.0, -0.4783690288121502, 0.8781589106040661, 0.12183091738552138},
    {0.0, 0.4783690288121502, -0.8781589106040661, 0.12183091738552138},
    {0.0, -0.4783690288121502, -0.8781589106040661, 0.12183091738552138},
    {0.0, 0.8781589106040661, 0.4783690288121502, 0.12183091738552138},
    {0.0, -0.8781589106040661, 0.4783690288121502, 0.12183091738552138},
    {0.0, 0.8781589106040661, -0.4783690288121502, 0.12183091738552138},
    {0.0, -0.8781589106040661, -0.4783690288121502, 0.12183091738552138},
};

static const double kLeb19[146][4] = {
    {1.0, 0.0, 0.0, 0.007535190013117138},
    {-1.0, 0.0, 0.0, 0.007535190013117138},
    {0.0, 1.0, 0.0, 0.007535190013117138},
    {0.0, -1.0, 0.0, 0.007535190013117138},
    {0.0, 0.0, 1.0, 0.007535190013117138},
    {0.0, 0.0, -1.0, 0.007535190013117138},
    {0.0, 0.7071067811865476, 0.7071067811865476, 0.09265184700375431},
    {0.0, -0.7071067811865476, 0.7071067811865476, 0.09265184700375431},
    {0.0, 0.7071067811865476, -0.7071067811865476, 0.09265184700375431},
    {0.0, -0.7071067811865476, -0.7071067811865476, 0.09265184700375431},
    {0.7071067811865476, 0.0, 0.7071067811865476, 0.09265184700375431},
    {0.7071067811865476, 0.0, -0.7071067811865476, 0.09265184700375431},
    {-0.7071067811865476, 0.0, 0.7071067811865476, 0.09265184700375431},
    {-0.7071067811865476, 0.0, -0.7071067811865476, 0.09265184700375431},
    {0.7071067811865476, 0.7071067811865476, 0.0, 0.09265184700375431},
    {-0.7071067811865476, 0.7071067811865476, 0.0, 0.09265184700375431},
    {0.7071067811865476, -0.7071067811865476, 0.0, 0.09265184700375431},
    {-0.7071067811865476, -0.7071067811865476, 0.0, 0.09265184700375431},
    {0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.09061000833610514},
    {-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.09061000833610514},
    {0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.09061000833610514},
    {0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.09061000833610514},
    {-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.09061000833610514},
    {0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.09061000833610514},
    {-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.09061000833610514},
    {-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.09061000833610514},
    {0.6764410400114264, 0.6764410400114264, 0.2912988822095268, 0.08942676055004592},
    {-0.6764410400114264, 0.6764410400114264, 0.2912988822095268, 0.08942676055004592},
    {0.6764410400114264, -0.6764410400114264, 0.2912988822095268, 0.08942676055004592},
    {0.6764410400114264, 0.6764410400114264, -0.2912988822095268, 0.08942676055004592},
    {-0.6764410400114264, -0.6764410400114264, 0.2912988822095268, 0.08942676055004592},
    {-0.6764410400114264, 0.6764410400114264, -0.2912988822095268, 0.08942676055004592},
    {0.6764410400114264, -0.6764410400114264, -0.2912988822095268, 0.08942676055004592},
    {-0.6764410400114264, -0.6764410400114264, -0.2912988822095268, 0.08942676055004592},
    {-0.6764410400114264, 0.2912988822095268, 0.6764410400114264, 0.08942676055004592},
    {0.6764410400114264, -0.2912988822095268, 0.6764410400114264, 0.08942676055004592},
    {0.6764410400114264, 0.2912988822095268, -0.6764410400114264, 0.08942676055004592},
    {-0.6764410400114264, -0.2912988822095268, 0.6764410400114264, 0.08942676055004592},
    {-0.6764410400114264, 0.2912988822095268, -0.6764410400114264, 0.08942676055004592},
    {0.6764410400114264, -0.2912988822095268, -0.6764410400114264, 0.08942676055004592},
    {-0.6764410400114264, -0.2912988822095268, -0.6764410400114264, 0.08942676055004592},
    {0.6764410400114264, 0.2912988822095268, 0.6764410400114264, 0.08942676055004592},
    {0.2912988822095268, 0.6764410400114264, 0.6764410400114264, 0.08942676055004592},
    {-0.2912988822095268, 0.6764410400114264, 0.6764410400114264, 0.08942676055004592},
    {0.2912988822095268, -0.6764410400114264, 0.6764410400114264, 0.08942676055004592},
    {0.2912988822095268, 0.6764410400114264, -0.6764410400114264, 0.08942676055004592},
    {-0.2912988822095268, -0.6764410400114264, 0.6764410400114264, 0.08942676055004592},
    {-0.2912988822095268, 0.6764410400114264, -0.6764410400114264, 0.08942676055004592},
    {0.2912988822095268, -0.6764410400114264, -0.6764410400114264, 0.08942676055004592},
    {-0.2912988822095268, -0.6764410400114264, -0.6764410400114264, 0.08942676055004592},
    {0.4174961227965453, 0.4174961227965453, 0.8070898183595826, 0.08487112439121475},
    {-0.4174961227965453, 0.4174961227965453, 0.8070898183595826, 0.08487112439121475},
    {0.4174961227965453, -0.4174961227965453, 0.8070898183595826, 0.08487112439121475},
    {0.4174961227965453, 0.4174961227965453, -0.8070898183595826, 0.08487112439121475},
    {-0.4174961227965453, -0.4174961227965453, 0.8070898183595826, 0.08487112439121475},
    {-0.4174961227965453, 0.4174961227965453, -0.8070898183595826, 0.08487112439121475},
    {0.4174961227965453, -0.4174961227965453, -0.8070898183595826, 0.08487112439121475},
    {-0.4174961227965453, -0.4174961227965453, -0.8070898183595826, 0.08487112439121475},
    {-0.4174961227965453, 0.8070898183595826, 0.4174961227965453, 0.08487112439121475},
    {0.4174961227965453, -0.8070898183595826, 0.4174961227965453, 0.08487112439121475},
    {0.4174961227965453, 0.8070898183595826, -0.4174961227965453, 0.08487112439121475},
    {-0.4174961227965453, -0.8070898183595826, 0.4174961227965453, 0.08487112439121475},
    {-0.4174961227965453, 0.8070898183595826, -0.4174961227965453, 0.08487112439121475},
    {0.4174961227965453, -0.8070898183595826, -0.4174961227965453, 0.08487112439121475},
    {-0.4174961227965453, -0.8070898183595826, -0.4174961227965453, 0.08487112439121475},
    {0.4174961227965453, 0.8070898183595826, 0.4174961227965453, 0.08487112439121475},
    {0.8070898183595826, 0.4174961227965453, 0.4174961227965453, 0.08487112439121475},
    {-0.8070898183595826, 0.4174961227965453, 0.4174961227965453, 0.08487112439121475},
    {0.8070898183595826, -0.4174961227965453, 0.4174961227965453, 0.08487112439121475},
    {0.8070898183595826, 0.4174961227965453, -0.4174961227965453, 0.08487112439121475},
    {-0.8070898183595826, -0.4174961227965453, 0.4174961227965453, 0.08487112439121475},
    {-0.8070898183595826, 0.4174961227965453, -0.4174961227965453, 0.08487112439121475},
    {0.8070898183595826, -0.4174961227965453, -0.4174961227965453, 0.08487112439121475},
    {-0.8070898183595826, -0.4174961227965453, -0.4174961227965453, 0.08487112439121475},
    {0.1574676672039082, 0.1574676672039082, 0.9748886436771732, 0.09518264418191037},
    {-0.1574676672039082, 0.1574676672039082, 0.9748886436771732, 0.09518264418191037},
    {0.1574676672039082, -0.1574676672039082, 0.9748886436771732, 0.09518264418191037},
    {0.1574676672039082, 0.1574676672039082, -0.9748886436771732, 0.09518264418191037},
    {-0.1574676672039082, -0.1574676672039082, 0.9748886436771732, 0.09518264418191037},
    {-0.1574676672039082, 0.1574676672039082, -0.9748886436771732, 0.09518264418191037},
    {0.1574676672039082, -0.1574676672039082, -0.9748886436771732, 0.09518264418191037},
    {-0.1574676672039082, -0.1574676672039082, -0.9748886436771732, 0.09518264418191037},
    {-0.1574676672039082, 0.9748886436771732, 0.1574676672039082, 0.09518264418191037},
    {0.1574676672039082, -0.9748886436771732, 0.1574676672039082, 0.09518264418191037},
    {0.1574676672039082, 0.9748886436771732, -0.1574676672039082, 0.09518264418191037},
    {-0.1574676672039082, -0.9748886436771732, 0.1574676672039082, 0.09518264418191037},
    {-0.1574676672039082, 0.9748886436771732, -0.1574676672039082, 0.09518264418191037},
    {0.1574676672039082, -0.9748886436771732, -0.1574676672039082, 0.09518264418191037},
    {-0.1574676672039082, -0.9748886436771732, -0.1574676672039082, 0.09518264418191037},
    {0.1574676672039082, 0.9748886436771732, 0.1574676672039082, 0.09518264418191037},
    {0.9748886436771732, 0.1574676672039082, 0.1574676672039082, 0.09518264418191037},
    {-0.9748886436771732, 0.1574676672039082, 0.1574676672039082, 0.09518264418191037},
    {0.9748886436771732, -0.1574676672039082, 0.1574676672039082, 0.09518264418191037},
    {0.9748886436771732, 0.1574676672039082, -0.1574676672039082, 0.09518264418191037},
    {-0.9748886436771732, -0.1574676672039082, 0.1574676672039082, 0.09518264418191037},
    {-0.9748886436771732, 0.1574676672039082, -0.1574676672039082, 0.09518264418191037},
    {0.9748886436771732, -0.1574676672039082, -0.1574676672039082, 0.09518264418191037},
    {-0.9748886436771732, -0.1574676672039082, -0.1574676672039082, 0.09518264418191037},
    {0.1403553811713183, 0.4493328323269557, 0.8822700112603227, 0.08785259467896815},
    {-0.1403553811713183, 0.4493328323269557, 0.8822700112603227, 0.08785259467896815},
    {0.1403553811713183, -0.4493328323269557, 0.8822700112603227, 0.08785259467896815},
    {0.1403553811713183, 0.4493328323269557, -0.8822700112603227, 0.08785259467896815},
    {-0.1403553811713183, -0.4493328323269557, 0.8822700112603227, 0.08785259467896815},
    {0.1403553811713183, -0.4493328323269557, -0.8822700112603227, 0.08785259467896815},
    {-0.1403553811713183, 0.4493328323269557, -0.8822700112603227, 0.08785259467896815},
    {-0.1403553811713183, -0.4493328323269557, -0.8822700112603227, 0.08785259467896815},
    {0.4493328323269557, 0.1403553811713183, 0.8822700112603227, 0.08785259467896815},
    {-0.4493328323269557, 0.1403553811713183, 0.8822700112603227, 0.08785259467896815},
    {0.4493328323269557, -0.1403553811713183, 0.8822700112603227, 0.08785259467896815},
    {0.4493328323269557, 0.1403553811713183, -0.8822700112603227, 0.08785259467896815},
    {-0.4493328323269557, -0.1403553811713183, 0.8822700112603227, 0.08785259467896815},
    {0.4493328323269557, -0.1403553811713183, -0.8822700112603227, 0.08785259467896815},
    {-0.4493328323269557, 0.1403553811713183, -0.8822700112603227, 0.08785259467896815},
    {-0.4493328323269557, -0.1403553811713183, -0.8822700112603227, 0.08785259467896815},
    {0.8822700112603227, 0.1403553811713183, 0.4493328323269557, 0.08785259467896815},
    {-0.8822700112603227, 0.1403553811713183, 0.4493328323269557, 0.08785259467896815},
    {0.8822700112603227, -0.1403553811713183, 0.4493328323269557, 0.08785259467896815},
    {0.8822700112603227, 0.1403553811713183, -0.4493328323269557, 0.08785259467896815},
    {-0.8822700112603227, -0.1403553811713183, 0.4493328323269557, 0.08785259467896815},
    {0.8822700112603227, -0.1403553811713183, -0.4493328323269557, 0.08785259467896815},
    {-0.8822700112603227, 0.1403553811713183, -0.4493328323269557, 0.08785259467896815},
    {-0.8822700112603227, -0.1403553811713183, -0.4493328323269557, 0.08785259467896815},
    {0.8822700112603227, 0.4493328323269557, 0.1403553811713183, 0.08785259467896815},
    {-0.8822700112603227, 0.4493328323269557, 0.1403553811713183, 0.08785259467896815},
    {0.8822700112603227, -0.4493328323269557, 0.1403553811713183, 0.08785259467896815},
    {0.8822700112603227, 0.4493328323269557, -0.1403553811713183, 0.08785259467896815},
    {-0.8822700112603227, -0.4493328323269557, 0.1403553811713183, 0.08785259467896815},
    {0.8822700112603227, -0.4493328323269557, -0.1403553811713183, 0.08785259467896815},
    {-0.8822700112603227, 0.4493328323269557, -0.1403553811713183, 0.08785259467896815},
    {-0.8822700112603227, -0.4493328323269557, -0.1403553811713183, 0.08785259467896815},
    {0.1403553811713183, 0.8822700112603227, 0.4493328323269557, 0.08785259467896815},
    {-0.1403553811713183, 0.8822700112603227, 0.4493328323269557, 0.08785259467896815},
    {0.1403553811713183, -0.8822700112603227, 0.4493328323269557, 0.08785259467896815},
    {0.1403553811713183, 0.8822700112603227, -0.4493328323269557, 0.08785259467896815},
    {-0.1403553811713183, -0.8822700112603227, 0.4493328323269557, 0.08785259467896815},
    {0.1403553811713183, -0.8822700112603227, -0.4493328323269557, 0.08785259467896815},
    {-0.1403553811713183, 0.8822700112603227, -0.4493328323269557, 0.08785259467896815},
    {-0.1403553811713183, -0.8822700112603227, -0.4493328323269557, 0.08785259467896815},
    {0.4493328323269557, 0.8822700112603227, 0.1403553811713183, 0.08785259467896815},
    {-0.4493328323269557, 0.8822700112603227, 0.1403553811713183, 0.08785259467896815},
    {0.4493328323269557, -0.8822700112603227, 0.1403553811713183, 0.08785259467896815},
    {0.4493328323269557, 0.8822700112603227, -0.1403553811713183, 0.08785259467896815},
    {-0.4493328323269557, -0.8822700112603227, 0.1403553811713183, 0.08785259467896815},
    {0.4493328323269557, -0.8822700112603227, -0.1403553811713183, 0.08785259467896815},
    {-0.4493328323269557, 0.8822700112603227, -0.1403553811713183, 0.08785259467896815},
    {-0.4493328323269557, -0.8822700112603227, -0.1403553811713183, 0.08785259467896815},
};

static const double kLeb21[170][4] = {
    {1.0, 0.0, 0.0, 0.06967855090540039},
    {-1.0, 0.0, 0.0, 0.06967855090540039},
    {0.0, 1.0, 0.0, 0.06967855090540039},
    {0.0, -1.0, 0.0, 0.06967855090540039},
    {0.0, 0.0, 1.0, 0.06967855090540039},
    {0.0, 0.0, -1.0, 0.06967855090540039},
    {0.0, 0.7071067811865476, 0.7071067811865476, 0.0762946177193528},
    {0.0, -0.7071067811865476, 0.7071067811865476, 0.0762946177193528},
    {0.0, 0.7071067811865476, -0.7071067811865476, 0.0762946177193528},
    {0.0, -0.7071067811865476, -0.7071067811865476, 0.0762946177193528},
    {0.7071067811865476, 0.0, 0.7071067811865476, 0.0762946177193528},
    {0.7071067811865476, 0.0, -0.7071067811865476, 0.0762946177193528},
    {-0.7071067811865476, 0.0, 0.7071067811865476, 0.0762946177193528},
    {-0.7071067811865476, 0.0, -0.7071067811865476, 0.0762946177193528},
    {0.7071067811865476, 0.7071067811865476, 0.0, 0.0762946177193528},
    {-0.7071067811865476, 0.7071067811865476, 0.0, 0.0762946177193528},
    {0.7071067811865476, -0.7071067811865476, 0.0, 0.0762946177193528},
    {-0.7071067811865476, -0.7071067811865476, 0.0, 0.0762946177193528},
    {0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.080219623085526},
    {-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.080219623085526},
    {0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.080219623085526},
    {0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.080219623085526},
    {-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.080219623085526},
    {0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.080219623085526},
    {-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.080219623085526},
    {-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.080219623085526},
    {0.2551252621114134, 0.2551252621114134, 0.9326425903126906, 0.06513636946550791},
    {-0.2551252621114134, 0.2551252621114134, 0.9326425903126906, 0.06513636946550791},
    {0.2551252621114134, -0.2551252621114134, 0.9326425903126906, 0.06513636946550791},
    {0.2551252621114134, 0.2551252621114134, -0.9326425903126906, 0.06513636946550791},
    {-0.2551252621114134, -0.2551252621114134, 0.9326425903126906, 0.06513636946550791},
    {-0.2551252621114134, 0.2551252621114134, -0.9326425903126906, 0.06513636946550791},
    {0.2551252621114134, -0.2551252621114134, -0.9326425903126906, 0.06513636946550791},
    {-0.2551252621114134, -0.2551252621114134, -0.9326425903126906, 0.06513636946550791},
    {-0.2551252621114134, 0.9326425903126906, 0.2551252621114134, 0.06513636946550791},
    {0.2551252621114134, -0.9326425903126906, 0.2551252621114134, 0.06513636946550791},
    {0.2551252621114134, 0.9326425903126906, -0.2551252621114134, 0.06513636946550791},
    {-0.2551252621114134, -0.9326425903126906, 0.2551252621114134, 0.06513636946550791},
    {-0.2551252621114134, 0.9326425903126906, -0.2551252621114134, 0.06513636946550791},
    {0.2551252621114134, -0.9326425903126906, -0.2551252621114134, 0.06513636946550791},
    {-0.2551252621114134, -0.9326425903126906, -0.2551252621114134, 0.06513636946550791},
    {0.2551252621114134, 0.9326425903126906, 0.2551252621114134, 0.06513636946550791},
    {0.9326425903126906, 0.2551252621114134, 0.2551252621114134, 0.06513636946550791},
    {-0.9326425903126906, 0.2551252621114134, 0.2551252621114134, 0.06513636946550791},
    {0.9326425903126906, -0.2551252621114134, 0.2551252621114134, 0.06513636946550791},
    {0.9326425903126906, 0.2551252621114134, -0.2551252621114134, 0.06513636946550791},
    {-0.9326425903126906, -0.2551252621114134, 0.2551252621114134, 0.06513636946550791},
    {-0.9326425903126906, 0.2551252621114134, -0.2551252621114134, 0.06513636946550791},
    {0.9326425903126906, -0.2551252621114134, -0.2551252621114134, 0.06513636946550791},
    {-0.9326425903126906, -0.2551252621114134, -0.2551252621114134, 0.06513636946550791},
    {0.6743601460362766, 0.6743601460362766, 0.3007935951377015, 0.07939343745253054},
    {-0.6743601460362766, 0.6743601460362766, 0.3007935951377015, 0.07939343745253054},
    {0.6743601460362766, -0.6743601460362766, 0.3007935951377015, 0.07939343745253054},
    {0.6743601460362766, 0.6743601460362766, -0.3007935951377015, 0.07939343745253054},
    {-0.6743601460362766, -0.6743601460362766, 0.3007935951377015, 0.07939343745253054},
    {-0.6743601460362766, 0.6743601460362766, -0.3007935951377015, 0.07939343745253054},
    {0.6743601460362766, -0.6743601460362766, -0.3007935951377015, 0.07939343745253054},
    {-0.6743601460362766, -0.6743601460362766, -0.3007935951377015, 0.07939343745253054},
    {-0.6743601460362766, 0.3007935951377015, 0.6743601460362766, 0.07939343745253054},
    {0.6743601460362766, -0.3007935951377015, 0.6743601460362766, 0.07939343745253054},
    {0.6743601460362766, 0.3007935951377015, -0.6743601460362766, 0.07939343745253054},
    {-0.6743601460362766, -0.3007935951377015, 0.6743601460362766, 0.07939343745253054},
    {-0.6743601460362766, 0.3007935951377015, -0.6743601460362766, 0.07939343745253054},
    {0.6743601460362766, -0.3007935951377015, -0.6743601460362766, 0.07939343745253054},
    {-0.6743601460362766, -0.3007935951377015, -0.6743601460362766, 0.07939343745253054},
    {0.6743601460362766, 0.3007935951377015, 0.6743601460362766, 0.07939343745253054},
    {0.3007935951377015, 0.6743601460362766, 0.6743601460362766, 0.07939343745253054},
    {-0.3007935951377015, 0.6743601460362766, 0.6743601460362766, 0.07939343745253054},
    {0.3007935951377015, -0.6743601460362766, 0.6743601460362766, 0.07939343745253054},
    {0.3007935951377015, 0.6743601460362766, -0.6743601460362766, 0.07939343745253054},
    {-0.3007935951377015, -0.6743601460362766, 0.6743601460362766, 0.07939343745253054},
    {-0.3007935951377015, 0.6743601460362766, -0.6743601460362766, 0.07939343745253054},
    {0.3007935951377015, -0.6743601460362766, -0.6743601460362766, 0.07939343745253054},
    {-0.3007935951377015, -0.6743601460362766, -0.6743601460362766, 0.07939343745253054},
    {0.431891069671941, 0.431891069671941, 0.7917955593934921, 0.07793248373075363},
    {-0.431891069671941, 0.431891069671941, 0.7917955593934921, 0.07793248373075363},
    {0.431891069671941, -0.431891069671941, 0.7917955593934921, 0.07793248373075363},
    {0.431891069671941, 0.431891069671941, -0.7917955593934921, 0.07793248373075363},
    {-0.431891069671941, -0.431891069671941, 0.7917955593934921, 0.07793248373075363},
    {-0.431891069671941, 0.431891069671941, -0.7917955593934921, 0.07793248373075363},
    {0.431891069671941, -0.431891069671941, -0.7917955593934921, 0.07793248373075363},
    {-0.431891069671941, -0.431891069671941, -0.7917955593934921, 0.07793248373075363},
    {-0.431891069671941, 0.7917955593934921, 0.431891069671941, 0.07793248373075363},
    {0.431891069671941, -0.7917955593934921, 0.431891069671941, 0.07793248373075363},
    {0.431891069671941, 0.7917955593934921, -0.431891069671941, 0.07793248373075363},
    {-0.431891069671941, -0.7917955593934921, 0.431891069671941, 0.07793248373075363},
    {-0.431891069671941, 0.7917955593934921, -0.431891069671941, 0.07793248373075363},
    {0.431891069671941, -0.7917955593934921, -0.431891069671941, 0.07793248373075363},
    {-0.431891069671941, -0.7917955593934921, -0.431891069671941, 0.07793248373075363},
    {0.431891069671941, 0.7917955593934921, 0.431891069671941, 0.07793248373075363},
    {0.7917955593934921, 0.431891069671941, 0.431891069671941, 0.07793248373075363},
    {-0.7917955593934921, 0.431891069671941, 0.431891069671941, 0.07793248373075363},
    {0.7917955593934921, -0.431891069671941, 0.431891069671941, 0.07793248373075363},
    {0.7917955593934921, 0.431891069671941, -0.431891069671941, 0.07793248373075363},
    {-0.7917955593934921, -0.431891069671941, 0.431891069671941, 0.07793248373075363},
    {-0.7917955593934921, 0.431891069671941, -0.431891069671941, 0.07793248373075363},
    {0.7917955593934921, -0.431891069671941, -0.431891069671941, 0.07793248373075363},
    {-0.7917955593934921, -0.431891069671941, -0.431891069671941, 0.07793248373075363},
    {0.2613931360335988, 0.9652324219764484, 0.0, 0.06882781368562169},
    {-0.2613931360335988, 0.9652324219764484, 0.0, 0.06882781368562169},
    {0.2613931360335988, -0.9652324219764484, 0.0, 0.06882781368562169},
    {-0.2613931360335988, -0.9652324219764484, 0.0, 0.06882781368562169},
    {0.9652324219764484, 0.2613931360335988, 0.0, 0.06882781368562169},
    {-0.9652324219764484, 0.2613931360335988, 0.0, 0.06882781368562169},
    {0.9652324219764484, -0.2613931360335988, 0.0, 0.06882781368562169},
    {-0.9652324219764484, -0.2613931360335988, 0.0, 0.06882781368562169},
    {0.2613931360335988, 0.0, 0.9652324219764484, 0.06882781368562169},
    {-0.2613931360335988, 0.0, 0.9652324219764484, 0.06882781368562169},
    {0.2613931360335988, 0.0, -0.9652324219764484, 0.06882781368562169},
    {-0.2613931360335988, 0.0, -0.9652324219764484, 0.06882781368562169},
    {0.9652324219764484, 0.0, 0.2613931360335988, 0.06882781368562169},
    {-0.9652324219764484, 0.0, 0.2613931360335988, 0.06882781368562169},
    {0.9652324219764484, 0.0, -0.2613931360335988, 0.06882781368562169},
    {-0.9652324219764484, 0.0, -0.2613931360335988, 0.06882781368562169},
    {0.0, 0.2613931360335988, 0.9652324219764484, 0.06882781368562169},
    {0.0, -0.2613931360335988, 0.9652324219764484, 0.06882781368562169},
    {0.0, 0.2613931360335988, -0.9652324219764484, 0.06882781368562169},
    {0.0, -0.2613931360335988, -0.9652324219764484, 0.06882781368562169},
    {0.0, 0.9652324219764484, 0.2613931360335988, 0.06882781368562169},
    {0.0, -0.9652324219764484, 0.2613931360335988, 0.06882781368562169},
    {0.0, 0.9652324219764484, -0.2613931360335988, 0.06882781368562169},
    {0.0, -0.9652324219764484, -0.2613931360335988, 0.06882781368562169},
    {0.4990453161796037, 0.1446630744325115, 0.8544158046846588, 0.0750009251580083},
    {-0.4990453161796037, 0.1446630744325115, 0.8544158046846588, 0.0750009251580083},
    {0.4990453161796037, -0.1446630744325115, 0.8544158046846588, 0.0750009251580083},
    {0.4990453161796037, 0.1446630744325115, -0.8544158046846588, 0.0750009251580083},
    {-0.4990453161796037, -0.1446630744325115, 0.8544158046846588, 0.0750009251580083},
    {0.4990453161796037, -0.1446630744325115, -0.8544158046846588, 0.0750009251580083},
    {-0.4990453161796037, 0.1446630744325115, -0.8544158046846588, 0.0750009251580083},
    {-0.4990453161796037, -0.1446630744325115, -0.8544158046846588, 0.0750009251580083},
    {0.1446630744325115, 0.4990453161796037, 0.8544158046846588, 0.0750009251580083},
    {-0.1446630744325115, 0.4990453161796037, 0.8544158046846588, 0.0750009251580083},
    {0.1446630744325115, -0.4990453161796037, 0.8544158046846588, 0.0750009251580083},
    {0.1446630744325115, 0.4990453161796037, -0.8544158046846588, 0.0750009251580083},
    {-0.1446630744325115, -0.4990453161796037, 0.8544158046846588, 0.0750009251580083},
    {0.1446630744325115, -0.4990453161796037, -0.8544158046846588, 0.0750009251580083},
    {-0.1446630744325115, 0.4990453161796037, -0.8544158046846588, 0.0750009251580083},
    {-0.1446630744325115, -0.4990453161796037, -0.8544158046846588, 0.0750009251580083},
    {0.8544158046846588, 0.4990453161796037, 0.1446630744325115, 0.0750009251580083},
    {-0.8544158046846588, 0.4990453161796037, 0.1446630744325115, 0.0750009251580083},
    {0.8544158046846588, -0.4990453161796037, 0.1446630744325115, 0.0750009251580083},
    {0.8544158046846588, 0.4990453161796037, -0.1446630744325115, 0.0750009251580083},
    {-0.8544158046846588, -0.4990453161796037, 0.1446630744325115, 0.0750009251580083},
    {0.8544158046846588, -0.4990453161796037, -0.1446630744325115, 0.0750009251580083},
    {-0.8544158046846588, 0.4990453161796037, -0.1446630744325115, 0.0750009251580083},
    {-0.8544158046846588, -0.4990453161796037, -0.1446630744325115, 0.0750009251580083},
    {0.8544158046846588, 0.1446630744325115, 0.4990453161796037, 0.0750009251580083},
    {-0.8544158046846588, 0.1446630744325115, 0.4990453161796037, 0.0750009251580083},
    {0.8544158046846588, -0.1446630744325115, 0.4990453161796037, 0.0750009251580083},
    {0.8544158046846588, 0.1446630744325115, -0.4990453161796037, 0.0750009251580083},
    {-0.8544158046846588, -0.1446630744325115, 0.4990453161796037, 0.0750009251580083},
    {0.8544158046846588, -0.1446630744325115, -0.4990453161796037, 0.0750009251580083},
    {-0.8544158046846588, 0.1446630744325115, -0.4990453161796037, 0.0750009251580083},
    {-0.8544158046846588, -0.1446630744325115, -0.4990453161796037, 0.0750009251580083},
    {0.4990453161796037, 0.8544158046846588, 0.1446630744325115, 0.0750009251580083},
    {-0.4990453161796037, 0.8544158046846588, 0.1446630744325115, 0.0750009251580083},
    {0.4990453161796037, -0.8544158046846588, 0.1446630744325115, 0.0750009251580083},
    {0.4990453161796037, 0.8544158046846588, -0.1446630744325115, 0.0750009251580083},
    {-0.4990453161796037, -0.8544158046846588, 0.1446630744325115, 0.0750009251580083},
    {0.4990453161796037, -0.8544158046846588, -0.1446630744325115, 0.0750009251580083},
    {-0.4990453161796037, 0.8544158046846588, -0.1446630744325115, 0.0750009251580083},
    {-0.4990453161796037, -0.8544158046846588, -0.1446630744325115, 0.0750009251580083},
    {0.1446630744325115, 0.8544158046846588, 0.4990453161796037, 0.0750009251580083},
    {-0.1446630744325115, 0.8544158046846588, 0.4990453161796037, 0.0750009251580083},
    {0.1446630744325115, -0.8544158046846588, 0.4990453161796037, 0.0750009251580083},
    {0.1446630744325115, 0.8544158046846588, -0.4990453161796037, 0.0750009251580083},
    {-0.1446630744325115, -0.8544158046846588, 0.4990453161796037, 0.0750009251580083},
    {0.1446630744325115, -0.8544158046846588, -0.4990453161796037, 0.0750009251580083},
    {-0.1446630744325115, 0.8544158046846588, -0.4990453161796037, 0.0750009251580083},
    {-0.1446630744325115, -0.8544158046846588, -0.4990453161796037, 0.0750009251580083},
};

static const double kLeb23[194][4] = {
    {1.0, 0.0, 0.0, 0.022397550621038466},
    {-1.0, 0.0, 0.0, 0.022397550621038466},
    {0.0, 1.0, 0.0, 0.022397550621038466},
    {0.0, -1.0, 0.0, 0.022397550621038466},
    {0.0, 0.0, 1.0, 0.022397550621038466},
    {0.0, 0.0, -1.0, 0.022397550621038466},
    {0.0, 0.7071067811865476, 0.7071067811865476, 0.07184075893484736},
    {0.0, -0.7071067811865476, 0.7071067811865476, 0.07184075893484736},
    {0.0, 0.7071067811865476, -0.7071067811865476, 0.07184075893484736},
    {0.0, -0.7071067811865476, -0.7071067811865476, 0.07184075893484736},
    {0.7071067811865476, 0.0, 0.7071067811865476, 0.07184075893484736},
    {0.7071067811865476, 0.0, -0.7071067811865476, 0.07184075893484736},
    {-0.7071067811865476, 0.0, 0.7071067811865476, 0.07184075893484736},
    {-0.7071067811865476, 0.0, -0.7071067811865476, 0.07184075893484736},
    {0.7071067811865476, 0.7071067811865476, 0.0, 0.07184075893484736},
    {-0.7071067811865476, 0.7071067811865476, 0.0, 0.07184075893484736},
    {0.7071067811865476, -0.7071067811865476, 0.0, 0.07184075893484736},
    {-0.7071067811865476, -0.7071067811865476, 0.0, 0.07184075893484736},
    {0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.07003719860124849},
    {-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.07003719860124849},
    {0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.07003719860124849},
    {0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.07003719860124849},
    {-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.07003719860124849},
    {0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.07003719860124849},
    {-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.07003719860124849},
    {-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.07003719860124849},
    {0.6712973442695226, 0.6712973442695226, 0.3141969941825863, 0.07048105416807013},
    {-0.6712973442695226, 0.6712973442695226, 0.3141969941825863, 0.07048105416807013},
    {0.6712973442695226, -0.6712973442695226, 0.3141969941825863, 0.07048105416807013},
    {0.6712973442695226, 0.6712973442695226, -0.3141969941825863, 0.07048105416807013},
    {-0.6712973442695226, -0.6712973442695226, 0.3141969941825863, 0.07048105416807013},
    {-0.6712973442695226, 0.6712973442695226, -0.3141969941825863, 0.07048105416807013},
    {0.6712973442695226, -0.6712973442695226, -0.3141969941825863, 0.07048105416807013},
    {-0.6712973442695226, -0.6712973442695226, -0.3141969941825863, 0.07048105416807013},
    {-0.6712973442695226, 0.3141969941825863, 0.6712973442695226, 0.07048105416807013},
    {0.6712973442695226, -0.3141969941825863, 0.6712973442695226, 0.07048105416807013},
    {0.6712973442695226, 0.3141969941825863, -0.6712973442695226, 0.07048105416807013},
    {-0.6712973442695226, -0.3141969941825863, 0.6712973442695226, 0.07048105416807013},
    {-0.6712973442695226, 0.3141969941825863, -0.6712973442695226, 0.07048105416807013},
    {0.6712973442695226, -0.3141969941825863, -0.6712973442695226, 0.07048105416807013},
    {-0.6712973442695226, -0.3141969941825863, -0.6712973442695226, 0.07048105416807013},
    {0.6712973442695226, 0.3141969941825863, 0.6712973442695226, 0.07048105416807013},
    {0.3141969941825863, 0.6712973442695226, 0.6712973442695226, 0.07048105416807013},
    {-0.3141969941825863, 0.6712973442695226, 0.6712973442695226, 0.07048105416807013},
    {0.3141969941825863, -0.6712973442695226, 0.6712973442695226, 0.07048105416807013},
    {0.3141969941825863, 0.6712973442695226, -0.6712973442695226, 0.07048105416807013},
    {-0.3141969941825863, -0.6712973442695226, 0.6712973442695226, 0.07048105416807013},
    {-0.3141969941825863, 0.6712973442695226, -0.6712973442695226, 0.07048105416807013},
    {0.3141969941825863, -0.6712973442695226, -0.6712973442695226, 0.07048105416807013},
    {-0.3141969941825863, -0.6712973442695226, -0.6712973442695226, 0.07048105416807013},
    {0.2892465627575439, 0.2892465627575439, 0.9125090968674737, 0.06482032680351046},
    {-0.2892465627575439, 0.2892465627575439, 0.9125090968674737, 0.06482032680351046},
    {0.2892465627575439, -0.2892465627575439, 0.9125090968674737, 0.06482032680351046},
    {0.2892465627575439, 0.2892465627575439, -0.9125090968674737, 0.06482032680351046},
    {-0.2892465627575439, -0.2892465627575439, 0.9125090968674737, 0.06482032680351046},
    {-0.2892465627575439, 0.2892465627575439, -0.9125090968674737, 0.06482032680351046},
    {0.2892465627575439, -0.2892465627575439, -0.9125090968674737, 0.06482032680351046},
    {-0.2892465627575439, -0.2892465627575439, -0.9125090968674737, 0.06482032680351046},
    {-0.2892465627575439, 0.9125090968674737, 0.2892465627575439, 0.06482032680351046},
    {0.2892465627575439, -0.9125090968674737, 0.2892465627575439, 0.06482032680351046},
    {0.2892465627575439, 0.9125090968674737, -0.2892465627575439, 0.06482032680351046},
    {-0.2892465627575439, -0.9125090968674737, 0.2892465627575439, 0.06482032680351046},
    {-0.2892465627575439, 0.9125090968674737, -0.2892465627575439, 0.06482032680351046},
    {0.2892465627575439, -0.9125090968674737, -0.2892465627575439, 0.06482032680351046},
    {-0.2892465627575439, -0.9125090968674737, -0.2892465627575439, 0.06482032680351046},
    {0.2892465627575439, 0.9125090968674737, 0.2892465627575439, 0.06482032680351046},
    {0.9125090968674737, 0.2892465627575439, 0.2892465627575439, 0.06482032680351046},
    {-0.9125090968674737, 0.2892465627575439, 0.2892465627575439, 0.06482032680351046},
    {0.9125090968674737, -0.2892465627575439, 0.2892465627575439, 0.06482032680351046},
    {0.9125090968674737, 0.2892465627575439, -0.2892465627575439, 0.06482032680351046},
    {-0.9125090968674737, -0.2892465627575439, 0.2892465627575439, 0.06482032680351046},
    {-0.9125090968674737, 0.2892465627575439, -0.2892465627575439, 0.06482032680351046},
    {0.9125090968674737, -0.2892465627575439, -0.2892465627575439, 0.06482032680351046},
    {-0.9125090968674737, -0.2892465627575439, -0.2892465627575439, 0.06482032680351046},
    {0.4446933178717437, 0.4446933178717437, 0.7774932193147671, 0.069350927593711},
    {-0.4446933178717437, 0.4446933178717437, 0.7774932193147671, 0.069350927593711},
    {0.4446933178717437, -0.4446933178717437, 0.7774932193147671, 0.069350927593711},
    {0.4446933178717437, 0.4446933178717437, -0.7774932193147671, 0.069350927593711},
    {-0.4446933178717437, -0.4446933178717437, 0.7774932193147671, 0.069350927593711},
    {-0.4446933178717437, 0.4446933178717437, -0.7774932193147671, 0.069350927593711},
    {0.4446933178717437, -0.4446933178717437, -0.7774932193147671, 0.069350927593711},
    {-0.4446933178717437, -0.4446933178717437, -0.7774932193147671, 0.069350927593711},
    {-0.4446933178717437, 0.7774932193147671, 0.4446933178717437, 0.069350927593711},
    {0.4446933178717437, -0.7774932193147671, 0.4446933178717437, 0.069350927593711},
    {0.4446933178717437, 0.7774932193147671, -0.4446933178717437, 0.069350927593711},
    {-0.4446933178717437, -0.7774932193147671, 0.4446933178717437, 0.069350927593711},
    {-0.4446933178717437, 0.7774932193147671, -0.4446933178717437, 0.069350927593711},
    {0.4446933178717437, -0.7774932193147671, -0.4446933178717437, 0.069350927593711},
    {-0.4446933178717437, -0.7774932193147671, -0.4446933178717437, 0.069350927593711},
    {0.4446933178717437, 0.7774932193147671, 0.4446933178717437, 0.069350927593711},
    {0.7774932193147671, 0.4446933178717437, 0.4446933178717437, 0.069350927593711},
    {-0.7774932193147671, 0.4446933178717437, 0.4446933178717437, 0.069350927593711},
    {0.7774932193147671, -0.4446933178717437, 0.4446933178717437, 0.069350927593711},
    {0.7774932193147671, 0.4446933178717437, -0.4446933178717437, 0.069350927593711},
    {-0.7774932193147671, -0.4446933178717437, 0.4446933178717437, 0.069350927593711},
    {-0.7774932193147671, 0.4446933178717437, -0.4446933178717437, 0.069350927593711},
    {0.7774932193147671, -0.4446933178717437, -0.4446933178717437, 0.069350927593711},
    {-0.7774932193147671, -0.4446933178717437, -0.4446933178717437, 0.069350927593711},
    {0.1299335447650067, 0.1299335447650067, 0.9829723027072532, 0.05160728216651316},
    {-0.1299335447650067, 0.1299335447650067, 0.9829723027072532, 0.05160728216651316},
    {0.1299335447650067, -0.1299335447650067, 0.9829723027072532, 0.05160728216651316},
    {0.1299335447650067, 0.1299335447650067, -0.9829723027072532, 0.05160728216651316},
    {-0.1299335447650067, -0.1299335447650067, 0.9829723027072532, 0.05160728216651316},
    {-0.1299335447650067, 0.1299335447650067, -0.9829723027072532, 0.05160728216651316},
    {0.1299335447650067, -0.1299335447650067, -0.9829723027072532, 0.05160728216651316},
    {-0.1299335447650067, -0.1299335447650067, -0.9829723027072532, 0.05160728216651316},
    {-0.1299335447650067, 0.9829723027072532, 0.1299335447650067, 0.05160728216651316},
    {0.1299335447650067, -0.9829723027072532, 0.1299335447650067, 0.05160728216651316},
    {0.1299335447650067, 0.9829723027072532, -0.1299335447650067, 0.05160728216651316},
    {-0.1299335447650067, -0.9829723027072532, 0.1299335447650067, 0.05160728216651316},
    {-0.1299335447650067, 0.9829723027072532, -0.1299335447650067, 0.05160728216651316},
    {0.1299335447650067, -0.9829723027072532, -0.1299335447650067, 0.05160728216651316},
    {-0.1299335447650067, -0.9829723027072532, -0.1299335447650067, 0.05160728216651316},
    {0.1299335447650067, 0.9829723027072532, 0.1299335447650067, 0.05160728216651316},
    {0.9829723027072532, 0.1299335447650067, 0.1299335447650067, 0.05160728216651316},
    {-0.9829723027072532, 0.1299335447650067, 0.1299335447650067, 0.05160728216651316},
    {0.9829723027072532, -0.1299335447650067, 0.1299335447650067, 0.05160728216651316},
    {0.9829723027072532, 0.1299335447650067, -0.1299335447650067, 0.05160728216651316},
    {-0.9829723027072532, -0.1299335447650067, 0.1299335447650067, 0.05160728216651316},
    {-0.9829723027072532, 0.1299335447650067, -0.1299335447650067, 0.05160728216651316},
    {0.9829723027072532, -0.1299335447650067, -0.1299335447650067, 0.05160728216651316},
    {-0.9829723027072532, -0.1299335447650067, -0.1299335447650067, 0.05160728216651316},
    {0.3457702197611283, 0.9383192181375916, 0.0, 0.06348336993464156},
    {-0.3457702197611283, 0.9383192181375916, 0.0, 0.06348336993464156},
    {0.3457702197611283, -0.9383192181375916, 0.0, 0.06348336993464156},
    {-0.3457702197611283, -0.9383192181375916, 0.0, 0.06348336993464156},
    {0.9383192181375916, 0.3457702197611283, 0.0, 0.06348336993464156},
    {-0.9383192181375916, 0.3457702197611283, 0.0, 0.06348336993464156},
    {0.9383192181375916, -0.3457702197611283, 0.0, 0.06348336993464156},
    {-0.9383192181375916, -0.3457702197611283, 0.0, 0.06348336993464156},
    {0.3457702197611283, 0.0, 0.9383192181375916, 0.06348336993464156},
    {-0.3457702197611283, 0.0, 0.9383192181375916, 0.06348336993464156},
    {0.3457702197611283, 0.0, -0.9383192181375916, 0.06348336993464156},
    {-0.3457702197611283, 0.0, -0.9383192181375916, 0.06348336993464156},
    {0.9383192181375916, 0.0, 0.3457702197611283, 0.06348336993464156},
    {-0.9383192181375916, 0.0, 0.3457702197611283, 0.06348336993464156},
    {0.9383192181375916, 0.0, -0.3457702197611283, 0.06348336993464156},
    {-0.9383192181375916, 0.0, -0.3457702197611283, 0.06348336993464156},
    {0.0, 0.3457702197611283, 0.9383192181375916, 0.06348336993464156},
    {0.0, -0.3457702197611283, 0.9383192181375916, 0.06348336993464156},
    {0.0, 0.3457702197611283, -0.9383192181375916, 0.06348336993464156},
    {0.0, -0.3457702197611283, -0.9383192181375916, 0.06348336993464156},
    {0.0, 0.9383192181375916, 0.3457702197611283, 0.06348336993464156},
    {0.0, -0.9383192181375916, 0.3457702197611283, 0.06348336993464156},
    {0.0, 0.9383192181375916, -0.3457702197611283, 0.06348336993464156},
    {0.0, -0.9383192181375916, -0.3457702197611283, 0.06348336993464156},
    {0.159041710538353, 0.8360360154824589, 0.525118572443642, 0.06949515747104322},
    {-0.159041710538353, 0.8360360154824589, 0.525118572443642, 0.06949515747104322},
    {0.159041710538353, -0.8360360154824589, 0.525118572443642, 0.06949515747104322},
    {0.159041710538353, 0.8360360154824589, -0.525118572443642, 0.06949515747104322},
    {-0.159041710538353, -0.8360360154824589, 0.525118572443642, 0.06949515747104322},
    {0.159041710538353, -0.8360360154824589, -0.525118572443642, 0.06949515747104322},
    {-0.159041710538353, 0.8360360154824589, -0.525118572443642, 0.06949515747104322},
    {-0.159041710538353, -0.8360360154824589, -0.525118572443642, 0.06949515747104322},
    {0.8360360154824589, 0.159041710538353, 0.525118572443642, 0.06949515747104322},
    {-0.8360360154824589, 0.159041710538353, 0.525118572443642, 0.06949515747104322},
    {0.8360360154824589, -0.159041710538353, 0.525118572443642, 0.06949515747104322},
    {0.8360360154824589, 0.159041710538353, -0.525118572443642, 0.06949515747104322},
    {-0.8360360154824589, -0.159041710538353, 0.525118572443642, 0.06949515747104322},
    {0.8360360154824589, -0.159041710538353, -0.525118572443642, 0.06949515747104322},
    {-0.8360360154824589, 0.159041710538353, -0.525118572443642, 0.06949515747104322},
    {-0.8360360154824589, -0.159041710538353, -0.525118572443642, 0.06949515747104322},
    {0.525118572443642, 0.159041710538353, 0.8360360154824589, 0.06949515747104322},
    {-0.525118572443642, 0.159041710538353, 0.8360360154824589, 0.06949515747104322},
    {0.525118572443642, -0.159041710538353, 0.8360360154824589, 0.06949515747104322},
    {0.525118572443642, 0.159041710538353, -0.8360360154824589, 0.06949515747104322},
    {-0.525118572443642, -0.159041710538353, 0.8360360154824589, 0.06949515747104322},
    {0.525118572443642, -0.159041710538353, -0.8360360154824589, 0.06949515747104322},
    {-0.525118572443642, 0.159041710538353, -0.8360360154824589, 0.06949515747104322},
    {-0.525118572443642, -0.159041710538353, -0.8360360154824589, 0.06949515747104322},
    {0.525118572443642, 0.8360360154824589, 0.159041710538353, 0.06949515747104322},
    {-0.525118572443642, 0.8360360154824589, 0.159041710538353, 0.06949515747104322},
    {0.525118572443642, -0.8360360154824589, 0.159041710538353, 0.06949515747104322},
    {0.525118572443642, 0.8360360154824589, -0.159041710538353, 0.06949515747104322},
    {-0.525118572443642, -0.8360360154824589, 0.159041710538353, 0.06949515747104322},
    {0.525118572443642, -0.8360360154824589, -0.159041710538353, 0.06949515747104322},
    {-0.525118572443642, 0.8360360154824589, -0.159041710538353, 0.06949515747104322},
    {-0.525118572443642, -0.8360360154824589, -0.159041710538353, 0.06949515747104322},
    {0.159041710538353, 0.525118572443642, 0.8360360154824589, 0.06949515747104322},
    {-0.159041710538353, 0.525118572443642, 0.8360360154824589, 0.06949515747104322},
    {0.159041710538353, -0.525118572443642, 0.8360360154824589, 0.06949515747104322},
    {0.159041710538353, 0.525118572443642, -0.8360360154824589, 0.06949515747104322},
    {-0.159041710538353, -0.525118572443642, 0.8360360154824589, 0.06949515747104322},
    {0.159041710538353, -0.525118572443642, -0.8360360154824589, 0.06949515747104322},
    {-0.159041710538353, 0.525118572443642, -0.8360360154824589, 0.06949515747104322},
    {-0.159041710538353, -0.525118572443642, -0.8360360154824589, 0.06949515747104322},
    {0.8360360154824589, 0.525118572443642, 0.159041710538353, 0.06949515747104322},
    {-0.8360360154824589, 0.525118572443642, 0.159041710538353, 0.06949515747104322},
    {0.8360360154824589, -0.525118572443642, 0.159041710538353, 0.06949515747104322},
    {0.8360360154824589, 0.525118572443642, -0.159041710538353, 0.06949515747104322},
    {-0.8360360154824589, -0.525118572443642, 0.159041710538353, 0.06949515747104322},
    {0.8360360154824589, -0.525118572443642, -0.159041710538353, 0.06949515747104322},
    {-0.8360360154824589, 0.525118572443642, -0.159041710538353, 0.06949515747104322},
    {-0.8360360154824589, -0.525118572443642, -0.159041710538353, 0.06949515747104322},
};

static const double kLeb25[230][4] = {
    {1.0, 0.0, 0.0, -0.6939954000094836},
    {-1.0, 0.0, 0.0, -0.6939954000094836},
    {0.0, 1.0, 0.0, -0.6939954000094836},
    {0.0, -1.0, 0.0, -0.6939954000094836},
    {0.0, 0.0, 1.0, -0.6939954000094836},
    {0.0, 0.0, -1.0, -0.6939954000094836},
    {0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.05592380005282849},
    {-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.05592380005282849},
    {0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.05592380005282849},
    {0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.05592380005282849},
    {-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.05592380005282849},
    {0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.05592380005282849},
    {-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.05592380005282849},
    {-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.05592380005282849},
    {0.4492044687397611, 0.4492044687397611, 0.772289253148364, 0.056508971453371054},
    {-0.4492044687397611, 0.4492044687397611, 0.772289253148364, 0.056508971453371054},
    {0.4492044687397611, -0.4492044687397611, 0.772289253148364, 0.056508971453371054},
    {0.4492044687397611, 0.4492044687397611, -0.772289253148364, 0.056508971453371054},
    {-0.4492044687397611, -0.4492044687397611, 0.772289253148364, 0.056508971453371054},
    {-0.4492044687397611, 0.4492044687397611, -0.772289253148364, 0.056508971453371054},
    {0.4492044687397611, -0.4492044687397611, -0.772289253148364, 0.056508971453371054},
    {-0.4492044687397611, -0.4492044687397611, -0.772289253148364, 0.056508971453371054},
    {-0.4492044687397611, 0.772289253148364, 0.4492044687397611, 0.056508971453371054},
    {0.4492044687397611, -0.772289253148364, 0.4492044687397611, 0.056508971453371054},
    {0.4492044687397611, 0.772289253148364, -0.4492044687397611, 0.056508971453371054},
    {-0.4492044687397611, -0.772289253148364, 0.4492044687397611, 0.056508971453371054},
    {-0.4492044687397611, 0.772289253148364, -0.4492044687397611, 0.056508971453371054},
    {0.4492044687397611, -0.772289253148364, -0.4492044687397611, 0.056508971453371054},
    {-0.4492044687397611, -0.772289253148364, -0.4492044687397611, 0.056508971453371054},
    {0.4492044687397611, 0.772289253148364, 0.4492044687397611, 0.056508971453371054},
    {0.772289253148364, 0.4492044687397611, 0.4492044687397611, 0.056508971453371054},
    {-0.772289253148364, 0.4492044687397611, 0.4492044687397611, 0.056508971453371054},
    {0.772289253148364, -0.4492044687397611, 0.4492044687397611, 0.056508971453371054},
    {0.772289253148364, 0.4492044687397611, -0.4492044687397611, 0.056508971453371054},
    {-0.772289253148364, -0.4492044687397611, 0.4492044687397611, 0.056508971453371054},
    {-0.772289253148364, 0.4492044687397611, -0.4492044687397611, 0.056508971453371054},
    {0.772289253148364, -0.4492044687397611, -0.4492044687397611, 0.056508971453371054},
    {-0.772289253148364, -0.4492044687397611, -0.4492044687397611, 0.056508971453371054},
    {0.2520419490210201, 0.2520419490210201, 0.9343177788458117, 0.06344953354748638},
    {-0.2520419490210201, 0.2520419490210201, 0.9343177788458117, 0.06344953354748638},
    {0.2520419490210201, -0.2520419490210201, 0.9343177788458117, 0.06344953354748638},
    {0.2520419490210201, 0.2520419490210201, -0.9343177788458117, 0.06344953354748638},
    {-0.2520419490210201, -0.2520419490210201, 0.9343177788458117, 0.06344953354748638},
    {-0.2520419490210201, 0.2520419490210201, -0.9343177788458117, 0.06344953354748638},
    {0.2520419490210201, -0.2520419490210201, -0.9343177788458117, 0.06344953354748638},
    {-0.2520419490210201, -0.2520419490210201, -0.9343177788458117, 0.06344953354748638},
    {-0.2520419490210201, 0.9343177788458117, 0.2520419490210201, 0.06344953354748638},
    {0.2520419490210201, -0.9343177788458117, 0.2520419490210201, 0.06344953354748638},
    {0.2520419490210201, 0.9343177788458117, -0.2520419490210201, 0.06344953354748638},
    {-0.2520419490210201, -0.9343177788458117, 0.2520419490210201, 0.06344953354748638},
    {-0.2520419490210201, 0.9343177788458117, -0.2520419490210201, 0.06344953354748638},
    {0.2520419490210201, -0.9343177788458117, -0.2520419490210201, 0.06344953354748638},
    {-0.2520419490210201, -0.9343177788458117, -0.2520419490210201, 0.06344953354748638},
    {0.2520419490210201, 0.9343177788458117, 0.2520419490210201, 0.06344953354748638},
    {0.9343177788458117, 0.2520419490210201, 0.2520419490210201, 0.06344953354748638},
    {-0.9343177788458117, 0.2520419490210201, 0.2520419490210201, 0.06344953354748638},
    {0.9343177788458117, -0.2520419490210201, 0.2520419490210201, 0.06344953354748638},
    {0.9343177788458117, 0.2520419490210201, -0.2520419490210201, 0.06344953354748638},
    {-0.9343177788458117, -0.2520419490210201, 0.2520419490210201, 0.06344953354748638},
    {-0.9343177788458117, 0.2520419490210201, -0.2520419490210201, 0.06344953354748638},
    {0.9343177788458117, -0.2520419490210201, -0.2520419490210201, 0.06344953354748638},
    {-0.9343177788458117, -0.2520419490210201, -0.2520419490210201, 0.06344953354748638},
    {0.6981906658447242, 0.6981906658447242, 0.1583022054634783, 0.049969016868749376},
    {-0.6981906658447242, 0.6981906658447242, 0.1583022054634783, 0.049969016868749376},
    {0.6981906658447242, -0.6981906658447242, 0.1583022054634783, 0.049969016868749376},
    {0.6981906658447242, 0.6981906658447242, -0.1583022054634783, 0.049969016868749376},
    {-0.6981906658447242, -0.6981906658447242, 0.1583022054634783, 0.049969016868749376},
    {-0.6981906658447242, 0.6981906658447242, -0.1583022054634783, 0.049969016868749376},
    {0.6981906658447242, -0.6981906658447242, -0.1583022054634783, 0.049969016868749376},
    {-0.6981906658447242, -0.6981906658447242, -0.1583022054634783, 0.049969016868749376},
    {-0.6981906658447242, 0.1583022054634783, 0.6981906658447242, 0.049969016868749376},
    {0.6981906658447242, -0.1583022054634783, 0.6981906658447242, 0.049969016868749376},
    {0.6981906658447242, 0.1583022054634783, -0.6981906658447242, 0.049969016868749376},
    {-0.6981906658447242, -0.1583022054634783, 0.6981906658447242, 0.049969016868749376},
    {-0.6981906658447242, 0.1583022054634783, -0.6981906658447242, 0.049969016868749376},
    {0.6981906658447242, -0.1583022054634783, -0.6981906658447242, 0.049969016868749376},
    {-0.6981906658447242, -0.1583022054634783, -0.6981906658447242, 0.049969016868749376},
    {0.6981906658447242, 0.1583022054634783, 0.6981906658447242, 0.049969016868749376},
    {0.1583022054634783, 0.6981906658447242, 0.6981906658447242, 0.049969016868749376},
    {-0.1583022054634783, 0.6981906658447242, 0.6981906658447242, 0.049969016868749376},
    {0.1583022054634783, -0.6981906658447242, 0.6981906658447242, 0.049969016868749376},
    {0.1583022054634783, 0.6981906658447242, -0.6981906658447242, 0.049969016868749376},
    {-0.1583022054634783, -0.6981906658447242, 0.6981906658447242, 0.049969016868749376},
    {-0.1583022054634783, 0.6981906658447242, -0.6981906658447242, 0.049969016868749376},
    {0.1583022054634783, -0.6981906658447242, -0.6981906658447242, 0.049969016868749376},
    {-0.1583022054634783, -0.6981906658447242, -0.6981906658447242, 0.049969016868749376},
    {0.658740524346096, 0.658740524346096, 0.3634856849567271, 0.05530963179496933},
    {-0.658740524346096, 0.658740524346096, 0.3634856849567271, 0.05530963179496933},
    {0.658740524346096, -0.658740524346096, 0.3634856849567271, 0.05530963179496933},
    {0.658740524346096, 0.658740524346096, -0.3634856849567271, 0.05530963179496933},
    {-0.658740524346096, -0.658740524346096, 0.3634856849567271, 0.05530963179496933},
    {-0.658740524346096, 0.658740524346096, -0.3634856849567271, 0.05530963179496933},
    {0.658740524346096, -0.658740524346096, -0.3634856849567271, 0.05530963179496933},
    {-0.658740524346096, -0.658740524346096, -0.3634856849567271, 0.05530963179496933},
    {-0.658740524346096, 0.3634856849567271, 0.658740524346096, 0.05530963179496933},
    {0.658740524346096, -0.3634856849567271, 0.658740524346096, 0.05530963179496933},
    {0.658740524346096, 0.3634856849567271, -0.658740524346096, 0.05530963179496933},
    {-0.658740524346096, -0.3634856849567271, 0.658740524346096, 0.05530963179496933},
    {-0.658740524346096, 0.3634856849567271, -0.658740524346096, 0.05530963179496933},
    {0.658740524346096, -0.3634856849567271, -0.658740524346096, 0.05530963179496933},
    {-0.658740524346096, -0.3634856849567271, -0.658740524346096, 0.05530963179496933},
    {0.658740524346096, 0.3634856849567271, 0.658740524346096, 0.05530963179496933},
    {0.3634856849567271, 0.658740524346096, 0.658740524346096, 0.05530963179496933},
    {-0.3634856849567271, 0.658740524346096, 0.658740524346096, 0.05530963179496933},
    {0.3634856849567271, -0.658740524346096, 0.658740524346096, 0.05530963179496933},
    {0.3634856849567271, 0.658740524346096, -0.658740524346096, 0.05530963179496933},
    {-0.3634856849567271, -0.658740524346096, 0.658740524346096, 0.05530963179496933},
    {-0.3634856849567271, 0.658740524346096, -0.658740524346096, 0.05530963179496933},
    {0.3634856849567271, -0.658740524346096, -0.658740524346096, 0.05530963179496933},
    {-0.3634856849567271, -0.658740524346096, -0.658740524346096, 0.05530963179496933},
    {0.0403854405009766, 0.0403854405009766, 0.9983676839677275, 0.21671263449840283},
    {-0.0403854405009766, 0.0403854405009766, 0.9983676839677275, 0.21671263449840283},
    {0.0403854405009766, -0.0403854405009766, 0.9983676839677275, 0.21671263449840283},
    {0.0403854405009766, 0.0403854405009766, -0.9983676839677275, 0.21671263449840283},
    {-0.0403854405009766, -0.0403854405009766, 0.9983676839677275, 0.21671263449840283},
    {-0.0403854405009766, 0.0403854405009766, -0.9983676839677275, 0.21671263449840283},
    {0.0403854405009766, -0.0403854405009766, -0.9983676839677275, 0.21671263449840283},
    {-0.0403854405009766, -0.0403854405009766, -0.9983676839677275, 0.21671263449840283},
    {-0.0403854405009766, 0.9983676839677275, 0.0403854405009766, 0.21671263449840283},
    {0.0403854405009766, -0.9983676839677275, 0.0403854405009766, 0.21671263449840283},
    {0.0403854405009766, 0.9983676839677275, -0.0403854405009766, 0.21671263449840283},
    {-0.0403854405009766, -0.9983676839677275, 0.0403854405009766, 0.21671263449840283},
    {-0.0403854405009766, 0.9983676839677275, -0.0403854405009766, 0.21671263449840283},
    {0.0403854405009766, -0.9983676839677275, -0.0403854405009766, 0.21671263449840283},
    {-0.0403854405009766, -0.9983676839677275, -0.0403854405009766, 0.21671263449840283},
    {0.0403854405009766, 0.9983676839677275, 0.0403854405009766, 0.21671263449840283},
    {0.9983676839677275, 0.0403854405009766, 0.0403854405009766, 0.21671263449840283},
    {-0.9983676839677275, 0.0403854405009766, 0.0403854405009766, 0.21671263449840283},
    {0.9983676839677275, -0.0403854405009766, 0.0403854405009766, 0.21671263449840283},
    {0.9983676839677275, 0.0403854405009766, -0.0403854405009766, 0.21671263449840283},
    {-0.9983676839677275, -0.0403854405009766, 0.0403854405009766, 0.21671263449840283},
    {-0.9983676839677275, 0.0403854405009766, -0.0403854405009766, 0.21671263449840283},
    {0.9983676839677275, -0.0403854405009766, -0.0403854405009766, 0.21671263449840283},
    {-0.9983676839677275, -0.0403854405009766, -0.0403854405009766, 0.21671263449840283},
    {0.5823842309715584, 0.8129136531733653, 0.0, 0.05316935827641036},
    {-0.5823842309715584, 0.8129136531733653, 0.0, 0.05316935827641036},
    {0.5823842309715584, -0.8129136531733653, 0.0, 0.05316935827641036},
    {-0.5823842309715584, -0.8129136531733653, 0.0, 0.05316935827641036},
    {0.8129136531733653, 0.5823842309715584, 0.0, 0.05316935827641036},
    {-0.8129136531733653, 0.5823842309715584, 0.0, 0.05316935827641036},
    {0.8129136531733653, -0.5823842309715584, 0.0, 0.05316935827641036},
    {-0.8129136531733653, -0.5823842309715584, 0.0, 0.05316935827641036},
    {0.5823842309715584, 0.0, 0.8129136531733653, 0.05316935827641036},
    {-0.5823842309715584, 0.0, 0.8129136531733653, 0.05316935827641036},
    {0.5823842309715584, 0.0, -0.8129136531733653, 0.05316935827641036},
    {-0.5823842309715584, 0.0, -0.8129136531733653, 0.05316935827641036},
    {0.8129136531733653, 0.0, 0.5823842309715584, 0.05316935827641036},
    {-0.8129136531733653, 0.0, 0.5823842309715584, 0.05316935827641036},
    {0.8129136531733653, 0.0, -0.5823842309715584, 0.05316935827641036},
    {-0.8129136531733653, 0.0, -0.5823842309715584, 0.05316935827641036},
    {0.0, 0.5823842309715584, 0.8129136531733653, 0.05316935827641036},
    {0.0, -0.5823842309715584, 0.8129136531733653, 0.05316935827641036},
    {0.0, 0.5823842309715584, -0.8129136531733653, 0.05316935827641036},
    {0.0, -0.5823842309715584, -0.8129136531733653, 0.05316935827641036},
    {0.0, 0.8129136531733653, 0.5823842309715584, 0.05316935827641036},
    {0.0, -0.8129136531733653, 0.5823842309715584, 0.05316935827641036},
    {0.0, 0.8129136531733653, -0.5823842309715584, 0.05316935827641036},
    {0.0, -0.8129136531733653, -0.5823842309715584, 0.05316935827641036},
    {0.3545877390518688, 0.935022745880593, 0.0, 0.06532087239116484},
    {-0.3545877390518688, 0.935022745880593, 0.0, 0.06532087239116484},
    {0.3545877390518688, -0.935022745880593, 0.0, 0.06532087239116484},
    {-0.3545877390518688, -0.935022745880593, 0.0, 0.06532087239116484},
    {0.935022745880593, 0.3545877390518688, 0.0, 0.06532087239116484},
    {-0.935022745880593, 0.3545877390518688, 0.0, 0.06532087239116484},
    {0.935022745880593, -0.3545877390518688, 0.0, 0.06532087239116484},
    {-0.935022745880593, -0.3545877390518688, 0.0, 0.06532087239116484},
    {0.3545877390518688, 0.0, 0.935022745880593, 0.06532087239116484},
    {-0.3545877390518688, 0.0, 0.935022745880593, 0.06532087239116484},
    {0.3545877390518688, 0.0, -0.935022745880593, 0.06532087239116484},
    {-0.3545877390518688, 0.0, -0.935022745880593, 0.06532087239116484},
    {0.935022745880593, 0.0, 0.3545877390518688, 0.06532087239116484},
    {-0.935022745880593, 0.0, 0.3545877390518688, 0.06532087239116484},
    {0.935022745880593, 0.0, -0.3545877390518688, 0.06532087239116484},
    {-0.935022745880593, 0.0, -0.3545877390518688, 0.06532087239116484},
    {0.0, 0.3545877390518688, 0.935022745880593, 0.06532087239116484},
    {0.0, -0.3545877390518688, 0.935022745880593, 0.06532087239116484},
    {0.0, 0.3545877390518688, -0.935022745880593, 0.06532087239116484},
    {0.0, -0.3545877390518688, -0.935022745880593, 0.06532087239116484},
    {0.0, 0.935022745880593, 0.3545877390518688, 0.06532087239116484},
    {0.0, -0.935022745880593, 0.3545877390518688, 0.06532087239116484},
    {0.0, 0.935022745880593, -0.3545877390518688, 0.06532087239116484},
    {0.0, -0.935022745880593, -0.3545877390518688, 0.06532087239116484},
    {0.2272181808998187, 0.4864661535886647, 0.8436365210688943, 0.05900817004291968},
    {-0.2272181808998187, 0.4864661535886647, 0.8436365210688943, 0.05900817004291968},
    {0.2272181808998187, -0.4864661535886647, 0.8436365210688943, 0.05900817004291968},
    {0.2272181808998187, 0.4864661535886647, -0.8436365210688943, 0.05900817004291968},
    {-0.2272181808998187, -0.4864661535886647, 0.8436365210688943, 0.05900817004291968},
    {0.2272181808998187, -0.4864661535886647, -0.8436365210688943, 0.05900817004291968},
    {-0.2272181808998187, 0.4864661535886647, -0.8436365210688943, 0.05900817004291968},
    {-0.2272181808998187, -0.4864661535886647, -0.8436365210688943, 0.05900817004291968},
    {0.4864661535886647, 0.2272181808998187, 0.8436365210688943, 0.05900817004291968},
    {-0.4864661535886647, 0.2272181808998187, 0.8436365210688943, 0.05900817004291968},
    {0.4864661535886647, -0.2272181808998187, 0.8436365210688943, 0.05900817004291968},
    {0.4864661535886647, 0.2272181808998187, -0.8436365210688943, 0.05900817004291968},
    {-0.4864661535886647, -0.2272181808998187, 0.8436365210688943, 0.05900817004291968},
    {0.4864661535886647, -0.2272181808998187, -0.8436365210688943, 0.05900817004291968},
    {-0.4864661535886647, 0.2272181808998187, -0.8436365210688943, 0.05900817004291968},
    {-0.4864661535886647, -0.2272181808998187, -0.8436365210688943, 0.05900817004291968},
    {0.8436365210688943, 0.2272181808998187, 0.4864661535886647, 0.05900817004291968},
    {-0.8436365210688943, 0.2272181808998187, 0.4864661535886647, 0.05900817004291968},
    {0.8436365210688943, -0.2272181808998187, 0.4864661535886647, 0.05900817004291968},
    {0.8436365210688943, 0.2272181808998187, -0.4864661535886647, 0.05900817004291968},
    {-0.8436365210688943, -0.2272181808998187, 0.4864661535886647, 0.05900817004291968},
    {0.8436365210688943, -0.2272181808998187, -0.4864661535886647, 0.05900817004291968},
    {-0.8436365210688943, 0.2272181808998187, -0.4864661535886647, 0.05900817004291968},
    {-0.8436365210688943, -0.2272181808998187, -0.4864661535886647, 0.05900817004291968},
    {0.8436365210688943, 0.4864661535886647, 0.2272181808998187, 0.05900817004291968},
    {-0.8436365210688943, 0.4864661535886647, 0.2272181808998187, 0.05900817004291968},
    {0.8436365210688943, -0.4864661535886647, 0.2272181808998187, 0.05900817004291968},
    {0.8436365210688943, 0.4864661535886647, -0.2272181808998187, 0.05900817004291968},
    {-0.8436365210688943, -0.4864661535886647, 0.2272181808998187, 0.05900817004291968},
    {0.8436365210688943, -0.4864661535886647, -0.2272181808998187, 0.05900817004291968},
    {-0.8436365210688943, 0.4864661535886647, -0.2272181808998187, 0.05900817004291968},
    {-0.8436365210688943, -0.4864661535886647, -0.2272181808998187, 0.05900817004291968},
    {0.2272181808998187, 0.8436365210688943, 0.4864661535886647, 0.05900817004291968},
    {-0.2272181808998187, 0.8436365210688943, 0.4864661535886647, 0.05900817004291968},
    {0.2272181808998187, -0.8436365210688943, 0.4864661535886647, 0.05900817004291968},
    {0.2272181808998187, 0.8436365210688943, -0.4864661535886647, 0.05900817004291968},
    {-0.2272181808998187, -0.8436365210688943, 0.4864661535886647, 0.05900817004291968},
    {0.2272181808998187, -0.8436365210688943, -0.4864661535886647, 0.05900817004291968},
    {-0.2272181808998187, 0.8436365210688943, -0.4864661535886647, 0.05900817004291968},
    {-0.2272181808998187, -0.8436365210688943, -0.4864661535886647, 0.05900817004291968},
    {0.4864661535886647, 0.8436365210688943, 0.2272181808998187, 0.05900817004291968},
    {-0.4864661535886647, 0.8436365210688943, 0.2272181808998187, 0.05900817004291968},
    {0.4864661535886647, -0.8436365210688943, 0.2272181808998187, 0.05900817004291968},
    {0.4864661535886647, 0.8436365210688943, -0.2272181808998187, 0.05900817004291968},
    {-0.4864661535886647, -0.8436365210688943, 0.2272181808998187, 0.05900817004291968},
    {0.4864661535886647, -0.8436365210688943, -0.2272181808998187, 0.05900817004291968},
    {-0.4864661535886647, 0.8436365210688943, -0.2272181808998187, 0.05900817004291968},
    {-0.4864661535886647, -0.8436365210688943, -0.2272181808998187, 0.05900817004291968},
};

static const double kLeb27[266][4] = {
    {1.0, 0.0, 0.0, -0.016509309755693702},
    {-1.0, 0.0, 0.0, -0.016509309755693702},
    {0.0, 1.0, 0.0, -0.016509309755693702},
    {0.0, -1.0, 0.0, -0.016509309755693702},
    {0.0, 0.0, 1.0, -0.016509309755693702},
    {0.0, 0.0, -1.0, -0.016509309755693702},
    {0.0, 0.7071067811865476, 0.7071067811865476, -0.03170154386474473},
    {0.0, -0.7071067811865476, 0.7071067811865476, -0.03170154386474473},
    {0.0, 0.7071067811865476, -0.7071067811865476, -0.03170154386474473},
    {0.0, -0.7071067811865476, -0.7071067811865476, -0.03170154386474473},
    {0.7071067811865476, 0.0, 0.7071067811865476, -0.03170154386474473},
    {0.7071067811865476, 0.0, -0.7071067811865476, -0.03170154386474473},
    {-0.7071067811865476, 0.0, 0.7071067811865476, -0.03170154386474473},
    {-0.7071067811865476, 0.0, -0.7071067811865476, -0.03170154386474473},
    {0.7071067811865476, 0.7071067811865476, 0.0, -0.03170154386474473},
    {-0.7071067811865476, 0.7071067811865476, 0.0, -0.03170154386474473},
    {0.7071067811865476, -0.7071067811865476, 0.0, -0.03170154386474473},
    {-0.7071067811865476, -0.7071067811865476, 0.0, -0.03170154386474473},
    {0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.052613557585617844},
    {-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.052613557585617844},
    {0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.052613557585617844},
    {0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.052613557585617844},
    {-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.052613557585617844},
    {0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.052613557585617844},
    {-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.052613557585617844},
    {-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.052613557585617844},
    {0.7039373391585475, 0.7039373391585475, 0.0945750764037131, 0.06679237068674557},
    {-0.7039373391585475, 0.7039373391585475, 0.0945750764037131, 0.06679237068674557},
    {0.7039373391585475, -0.7039373391585475, 0.0945750764037131, 0.06679237068674557},
    {0.7039373391585475, 0.7039373391585475, -0.0945750764037131, 0.06679237068674557},
    {-0.7039373391585475, -0.7039373391585475, 0.0945750764037131, 0.06679237068674557},
    {-0.7039373391585475, 0.7039373391585475, -0.0945750764037131, 0.06679237068674557},
    {0.7039373391585475, -0.7039373391585475, -0.0945750764037131, 0.06679237068674557},
    {-0.7039373391585475, -0.7039373391585475, -0.0945750764037131, 0.06679237068674557},
    {-0.7039373391585475, 0.0945750764037131, 0.7039373391585475, 0.06679237068674557},
    {0.7039373391585475, -0.0945750764037131, 0.7039373391585475, 0.06679237068674557},
    {0.7039373391585475, 0.0945750764037131, -0.7039373391585475, 0.06679237068674557},
    {-0.7039373391585475, -0.0945750764037131, 0.7039373391585475, 0.06679237068674557},
    {-0.7039373391585475, 0.0945750764037131, -0.7039373391585475, 0.06679237068674557},
    {0.7039373391585475, -0.0945750764037131, -0.7039373391585475, 0.06679237068674557},
    {-0.7039373391585475, -0.0945750764037131, -0.7039373391585475, 0.06679237068674557},
    {0.7039373391585475, 0.0945750764037131, 0.7039373391585475, 0.06679237068674557},
    {0.0945750764037131, 0.7039373391585475, 0.7039373391585475, 0.06679237068674557},
    {-0.0945750764037131, 0.7039373391585475, 0.7039373391585475, 0.06679237068674557},
    {0.0945750764037131, -0.7039373391585475, 0.7039373391585475, 0.06679237068674557},
    {0.0945750764037131, 0.7039373391585475, -0.7039373391585475, 0.06679237068674557},
    {-0.0945750764037131, -0.7039373391585475, 0.7039373391585475, 0.06679237068674557},
    {-0.0945750764037131, 0.7039373391585475, -0.7039373391585475, 0.06679237068674557},
    {0.0945750764037131, -0.7039373391585475, -0.7039373391585475, 0.06679237068674557},
    {-0.0945750764037131, -0.7039373391585475, -0.7039373391585475, 0.06679237068674557},
    {0.1012526248572414, 0.1012526248572414, 0.9896948074629054, 0.050857891039543995},
    {-0.1012526248572414, 0.1012526248572414, 0.9896948074629054, 0.050857891039543995},
    {0.1012526248572414, -0.1012526248572414, 0.9896948074629054, 0.050857891039543995},
    {0.1012526248572414, 0.1012526248572414, -0.9896948074629054, 0.050857891039543995},
    {-0.1012526248572414, -0.1012526248572414, 0.9896948074629054, 0.050857891039543995},
    {-0.1012526248572414, 0.1012526248572414, -0.9896948074629054, 0.050857891039543995},
    {0.1012526248572414, -0.1012526248572414, -0.9896948074629054, 0.050857891039543995},
    {-0.1012526248572414, -0.1012526248572414, -0.9896948074629054, 0.050857891039543995},
    {-0.1012526248572414, 0.9896948074629054, 0.1012526248572414, 0.050857891039543995},
    {0.1012526248572414, -0.9896948074629054, 0.1012526248572414, 0.050857891039543995},
    {0.1012526248572414, 0.9896948074629054, -0.1012526248572414, 0.050857891039543995},
    {-0.1012526248572414, -0.9896948074629054, 0.1012526248572414, 0.050857891039543995},
    {-0.1012526248572414, 0.9896948074629054, -0.1012526248572414, 0.050857891039543995},
    {0.1012526248572414, -0.9896948074629054, -0.1012526248572414, 0.050857891039543995},
    {-0.1012526248572414, -0.9896948074629054, -0.1012526248572414, 0.050857891039543995},
    {0.1012526248572414, 0.9896948074629054, 0.1012526248572414, 0.050857891039543995},
    {0.9896948074629054, 0.1012526248572414, 0.1012526248572414, 0.050857891039543995},
    {-0.9896948074629054, 0.1012526248572414, 0.1012526248572414, 0.050857891039543995},
    {0.9896948074629054, -0.1012526248572414, 0.1012526248572414, 0.050857891039543995},
    {0.9896948074629054, 0.1012526248572414, -0.1012526248572414, 0.050857891039543995},
    {-0.9896948074629054, -0.1012526248572414, 0.1012526248572414, 0.050857891039543995},
    {-0.9896948074629054, 0.1012526248572414, -0.1012526248572414, 0.050857891039543995},
    {0.9896948074629054, -0.1012526248572414, -0.1012526248572414, 0.050857891039543995},
    {-0.9896948074629054, -0.1012526248572414, -0.1012526248572414, 0.050857891039543995},
    {0.4647448726420539, 0.4647448726420539, 0.7536739392508157, 0.05167897791314545},
    {-0.4647448726420539, 0.4647448726420539, 0.7536739392508157, 0.05167897791314545},
    {0.4647448726420539, -0.4647448726420539, 0.7536739392508157, 0.05167897791314545},
    {0.4647448726420539, 0.4647448726420539, -0.7536739392508157, 0.05167897791314545},
    {-0.4647448726420539, -0.4647448726420539, 0.7536739392508157, 0.05167897791314545},
    {-0.4647448726420539, 0.4647448726420539, -0.7536739392508157, 0.05167897791314545},
    {0.4647448726420539, -0.4647448726420539, -0.7536739392508157, 0.05167897791314545},
    {-0.4647448726420539, -0.4647448726420539, -0.7536739392508157, 0.05167897791314545},
    {-0.4647448726420539, 0.7536739392508157, 0.4647448726420539, 0.05167897791314545},
    {0.4647448726420539, -0.7536739392508157, 0.4647448726420539, 0.05167897791314545},
    {0.4647448726420539, 0.7536739392508157, -0.4647448726420539, 0.05167897791314545},
    {-0.4647448726420539, -0.7536739392508157, 0.4647448726420539, 0.05167897791314545},
    {-0.4647448726420539, 0.7536739392508157, -0.4647448726420539, 0.05167897791314545},
    {0.4647448726420539, -0.7536739392508157, -0.4647448726420539, 0.05167897791314545},
    {-0.4647448726420539, -0.7536739392508157, -0.4647448726420539, 0.05167897791314545},
    {0.4647448726420539, 0.7536739392508157, 0.4647448726420539, 0.05167897791314545},
    {0.7536739392508157, 0.4647448726420539, 0.4647448726420539, 0.05167897791314545},
    {-0.7536739392508157, 0.4647448726420539, 0.4647448726420539, 0.05167897791314545},
    {0.7536739392508157, -0.4647448726420539, 0.4647448726420539, 0.05167897791314545},
    {0.7536739392508157, 0.4647448726420539, -0.4647448726420539, 0.05167897791314545},
    {-0.7536739392508157, -0.4647448726420539, 0.4647448726420539, 0.05167897791314545},
    {-0.7536739392508157, 0.4647448726420539, -0.4647448726420539, 0.05167897791314545},
    {0.7536739392508157, -0.4647448726420539, -0.4647448726420539, 0.05167897791314545},
    {-0.7536739392508157, -0.4647448726420539, -0.4647448726420539, 0.05167897791314545},
    {0.3277420654971629, 0.3277420654971629, 0.8860983449974991, 0.04518345242576233},
    {-0.3277420654971629, 0.3277420654971629, 0.8860983449974991, 0.04518345242576233},
    {0.3277420654971629, -0.3277420654971629, 0.8860983449974991, 0.04518345242576233},
    {0.3277420654971629, 0.3277420654971629, -0.8860983449974991, 0.04518345242576233},
    {-0.3277420654971629, -0.3277420654971629, 0.8860983449974991, 0.04518345242576233},
    {-0.3277420654971629, 0.3277420654971629, -0.8860983449974991, 0.04518345242576233},
    {0.3277420654971629, -0.3277420654971629, -0.8860983449974991, 0.04518345242576233},
    {-0.3277420654971629, -0.3277420654971629, -0.8860983449974991, 0.04518345242576233},
    {-0.3277420654971629, 0.8860983449974991, 0.3277420654971629, 0.04518345242576233},
    {0.3277420654971629, -0.8860983449974991, 0.3277420654971629, 0.04518345242576233},
    {0.3277420654971629, 0.8860983449974991, -0.3277420654971629, 0.04518345242576233},
    {-0.3277420654971629, -0.8860983449974991, 0.3277420654971629, 0.04518345242576233},
    {-0.3277420654971629, 0.8860983449974991, -0.3277420654971629, 0.04518345242576233},
    {0.3277420654971629, -0.8860983449974991, -0.3277420654971629, 0.04518345242576233},
    {-0.3277420654971629, -0.8860983449974991, -0.3277420654971629, 0.04518345242576233},
    {0.3277420654971629, 0.8860983449974991, 0.3277420654971629, 0.04518345242576233},
    {0.8860983449974991, 0.3277420654971629, 0.3277420654971629, 0.04518345242576233},
    {-0.8860983449974991, 0.3277420654971629, 0.3277420654971629, 0.04518345242576233},
    {0.8860983449974991, -0.3277420654971629, 0.3277420654971629, 0.04518345242576233},
    {0.8860983449974991, 0.3277420654971629, -0.3277420654971629, 0.04518345242576233},
    {-0.8860983449974991, -0.3277420654971629, 0.3277420654971629, 0.04518345242576233},
    {-0.8860983449974991, 0.3277420654971629, -0.3277420654971629, 0.04518345242576233},
    {0.8860983449974991, -0.3277420654971629, -0.3277420654971629, 0.04518345242576233},
    {-0.8860983449974991, -0.3277420654971629, -0.3277420654971629, 0.04518345242576233},
    {0.6620338663699974, 0.6620338663699974, 0.3513151285646334, 0.053484123945439596},
    {-0.6620338663699974, 0.6620338663699974, 0.3513151285646334, 0.053484123945439596},
    {0.6620338663699974, -0.6620338663699974, 0.3513151285646334, 0.053484123945439596},
    {0.6620338663699974, 0.6620338663699974, -0.3513151285646334, 0.053484123945439596},
    {-0.6620338663699974, -0.6620338663699974, 0.3513151285646334, 0.053484123945439596},
    {-0.6620338663699974, 0.6620338663699974, -0.3513151285646334, 0.053484123945439596},
    {0.6620338663699974, -0.6620338663699974, -0.3513151285646334, 0.053484123945439596},
    {-0.6620338663699974, -0.6620338663699974, -0.3513151285646334, 0.053484123945439596},
    {-0.6620338663699974, 0.3513151285646334, 0.6620338663699974, 0.053484123945439596},
    {0.6620338663699974, -0.3513151285646334, 0.6620338663699974, 0.053484123945439596},
    {0.6620338663699974, 0.3513151285646334, -0.6620338663699974, 0.053484123945439596},
    {-0.6620338663699974, -0.3513151285646334, 0.6620338663699974, 0.053484123945439596},
    {-0.6620338663699974, 0.3513151285646334, -0.6620338663699974, 0.053484123945439596},
    {0.6620338663699974, -0.3513151285646334, -0.6620338663699974, 0.053484123945439596},
    {-0.6620338663699974, -0.3513151285646334, -0.6620338663699974, 0.053484123945439596},
    {0.6620338663699974, 0.3513151285646334, 0.6620338663699974, 0.053484123945439596},
    {0.3513151285646334, 0.6620338663699974, 0.6620338663699974, 0.053484123945439596},
    {-0.3513151285646334, 0.6620338663699974, 0.6620338663699974, 0.053484123945439596},
    {0.3513151285646334, -0.6620338663699974, 0.6620338663699974, 0.053484123945439596},
    {0.3513151285646334, 0.6620338663699974, -0.6620338663699974, 0.053484123945439596},
    {-0.3513151285646334, -0.6620338663699974, 0.6620338663699974, 0.053484123945439596},
    {-0.3513151285646334, 0.6620338663699974, -0.6620338663699974, 0.053484123945439596},
    {0.3513151285646334, -0.6620338663699974, -0.6620338663699974, 0.053484123945439596},
    {-0.3513151285646334, -0.6620338663699974, -0.6620338663699974, 0.053484123945439596},
    {0.8506508083520399, 0.5257311121191337, 0.0, 0.053150503760415385},
    {-0.8506508083520399, 0.5257311121191337, 0.0, 0.053150503760415385},
    {0.8506508083520399, -0.5257311121191337, 0.0, 0.053150503760415385},
    {-0.8506508083520399, -0.5257311121191337, 0.0, 0.053150503760415385},
    {0.5257311121191337, 0.8506508083520399, 0.0, 0.053150503760415385},
    {-0.5257311121191337, 0.8506508083520399, 0.0, 0.053150503760415385},
    {0.5257311121191337, -0.8506508083520399, 0.0, 0.053150503760415385},
    {-0.5257311121191337, -0.8506508083520399, 0.0, 0.053150503760415385},
    {0.8506508083520399, 0.0, 0.5257311121191337, 0.053150503760415385},
    {-0.8506508083520399, 0.0, 0.5257311121191337, 0.053150503760415385},
    {0.8506508083520399, 0.0, -0.5257311121191337, 0.053150503760415385},
    {-0.8506508083520399, 0.0, -0.5257311121191337, 0.053150503760415385},
    {0.5257311121191337, 0.0, 0.8506508083520399, 0.053150503760415385},
    {-0.5257311121191337, 0.0, 0.8506508083520399, 0.053150503760415385},
    {0.5257311121191337, 0.0, -0.8506508083520399, 0.053150503760415385},
    {-0.5257311121191337, 0.0, -0.8506508083520399, 0.053150503760415385},
    {0.0, 0.8506508083520399, 0.5257311121191337, 0.053150503760415385},
    {0.0, -0.8506508083520399, 0.5257311121191337, 0.053150503760415385},
    {0.0, 0.8506508083520399, -0.5257311121191337, 0.053150503760415385},
    {0.0, -0.8506508083520399, -0.5257311121191337, 0.053150503760415385},
    {0.0, 0.5257311121191337, 0.8506508083520399, 0.053150503760415385},
    {0.0, -0.5257311121191337, 0.8506508083520399, 0.053150503760415385},
    {0.0, 0.5257311121191337, -0.8506508083520399, 0.053150503760415385},
    {0.0, -0.5257311121191337, -0.8506508083520399, 0.053150503760415385},
    {0.3233484542692899, 0.1153112011009701, 0.9392279297499158, 0.051282280606568455},
    {-0.3233484542692899, 0.1153112011009701, 0.9392279297499158, 0.051282280606568455},
    {0.3233484542692899, -0.1153112011009701, 0.9392279297499158, 0.051282280606568455},
    {0.3233484542692899, 0.1153112011009701, -0.9392279297499158, 0.051282280606568455},
    {-0.3233484542692899, -0.1153112011009701, 0.9392279297499158, 0.051282280606568455},
    {0.3233484542692899, -0.1153112011009701, -0.9392279297499158, 0.051282280606568455},
    {-0.3233484542692899, 0.1153112011009701, -0.9392279297499158, 0.051282280606568455},
    {-0.3233484542692899, -0.1153112011009701, -0.9392279297499158, 0.051282280606568455},
    {0.1153112011009701, 0.3233484542692899, 0.9392279297499158, 0.051282280606568455},
    {-0.1153112011009701, 0.3233484542692899, 0.9392279297499158, 0.051282280606568455},
    {0.1153112011009701, -0.3233484542692899, 0.9392279297499158, 0.051282280606568455},
    {0.1153112011009701, 0.3233484542692899, -0.9392279297499158, 0.051282280606568455},
    {-0.1153112011009701, -0.3233484542692899, 0.9392279297499158, 0.051282280606568455},
    {0.1153112011009701, -0.3233484542692899, -0.9392279297499158, 0.051282280606568455},
    {-0.1153112011009701, 0.3233484542692899, -0.9392279297499158, 0.051282280606568455},
    {-0.1153112011009701, -0.3233484542692899, -0.9392279297499158, 0.051282280606568455},
    {0.9392279297499158, 0.3233484542692899, 0.1153112011009701, 0.051282280606568455},
    {-0.9392279297499158, 0.3233484542692899, 0.1153112011009701, 0.051282280606568455},
    {0.9392279297499158, -0.3233484542692899, 0.1153112011009701, 0.051282280606568455},
    {0.9392279297499158, 0.3233484542692899, -0.1153112011009701, 0.051282280606568455},
    {-0.9392279297499158, -0.3233484542692899, 0.1153112011009701, 0.051282280606568455},
    {0.9392279297499158, -0.3233484542692899, -0.1153112011009701, 0.051282280606568455},
    {-0.9392279297499158, 0.3233484542692899, -0.1153112011009701, 0.051282280606568455},
    {-0.9392279297499158, -0.3233484542692899, -0.1153112011009701, 0.051282280606568455},
    {0.9392279297499158, 0.1153112011009701, 0.3233484542692899, 0.051282280606568455},
    {-0.9392279297499158, 0.1153112011009701, 0.3233484542692899, 0.051282280606568455},
    {0.9392279297499158, -0.1153112011009701, 0.3233484542692899, 0.051282280606568455},
    {0.9392279297499158, 0.1153112011009701, -0.3233484542692899, 0.051282280606568455},
    {-0.9392279297499158, -0.1153112011009701, 0.3233484542692899, 0.051282280606568455},
    {0.9392279297499158, -0.1153112011009701, -0.3233484542692899, 0.051282280606568455},
    {-0.9392279297499158, 0.1153112011009701, -0.3233484542692899, 0.051282280606568455},
    {-0.9392279297499158, -0.1153112011009701, -0.3233484542692899, 0.051282280606568455},
    {0.3233484542692899, 0.9392279297499158, 0.1153112011009701, 0.051282280606568455},
    {-0.3233484542692899, 0.9392279297499158, 0.1153112011009701, 0.051282280606568455},
    {0.3233484542692899, -0.9392279297499158, 0.1153112011009701, 0.051282280606568455},
    {0.3233484542692899, 0.9392279297499158, -0.1153112011009701, 0.051282280606568455},
    {-0.3233484542692899, -0.9392279297499158, 0.1153112011009701, 0.051282280606568455},
    {0.3233484542692899, -0.9392279297499158, -0.1153112011009701, 0.051282280606568455},
    {-0.3233484542692899, 0.9392279297499158, -0.1153112011009701, 0.051282280606568455},
    {-0.3233484542692899, -0.9392279297499158, -0.1153112011009701, 0.051282280606568455},
    {0.1153112011009701, 0.9392279297499158, 0.3233484542692899, 0.051282280606568455},
    {-0.1153112011009701, 0.9392279297499158, 0.3233484542692899, 0.051282280606568455},
    {0.1153112011009701, -0.9392279297499158, 0.3233484542692899, 0.051282280606568455},
    {0.1153112011009701, 0.9392279297499158, -0.3233484542692899, 0.051282280606568455},
    {-0.1153112011009701, -0.9392279297499158, 0.3233484542692899, 0.051282280606568455},
    {0.1153112011009701, -0.9392279297499158, -0.3233484542692899, 0.051282280606568455},
    {-0.1153112011009701, 0.9392279297499158, -0.3233484542692899, 0.051282280606568455},
    {-0.1153112011009701, -0.9392279297499158, -0.3233484542692899, 0.051282280606568455},
    {0.2314790158712601, 0.5244939240922365, 0.8193433888191203, 0.051163570728433076},
    {-0.2314790158712601, 0.5244939240922365, 0.8193433888191203, 0.051163570728433076},
    {0.2314790158712601, -0.5244939240922365, 0.8193433888191203, 0.051163570728433076},
    {0.2314790158712601, 0.5244939240922365, -0.8193433888191203, 0.051163570728433076},
    {-0.2314790158712601, -0.5244939240922365, 0.8193433888191203, 0.051163570728433076},
    {0.2314790158712601, -0.5244939240922365, -0.8193433888191203, 0.051163570728433076},
    {-0.2314790158712601, 0.5244939240922365, -0.8193433888191203, 0.051163570728433076},
    {-0.2314790158712601, -0.5244939240922365, -0.8193433888191203, 0.051163570728433076},
    {0.5244939240922365, 0.2314790158712601, 0.8193433888191203, 0.051163570728433076},
    {-0.5244939240922365, 0.2314790158712601, 0.8193433888191203, 0.051163570728433076},
    {0.5244939240922365, -0.2314790158712601, 0.8193433888191203, 0.051163570728433076},
    {0.5244939240922365, 0.2314790158712601, -0.8193433888191203, 0.051163570728433076},
    {-0.5244939240922365, -0.2314790158712601, 0.8193433888191203, 0.051163570728433076},
    {0.5244939240922365, -0.2314790158712601, -0.8193433888191203, 0.051163570728433076},
    {-0.5244939240922365, 0.2314790158712601, -0.8193433888191203, 0.051163570728433076},
    {-0.5244939240922365, -0.2314790158712601, -0.8193433888191203, 0.051163570728433076},
    {0.8193433888191203, 0.2314790158712601, 0.5244939240922365, 0.051163570728433076},
    {-0.8193433888191203, 0.2314790158712601, 0.5244939240922365, 0.051163570728433076},
    {0.8193433888191203, -0.2314790158712601, 0.5244939240922365, 0.051163570728433076},
    {0.8193433888191203, 0.2314790158712601, -0.5244939240922365, 0.051163570728433076},
    {-0.8193433888191203, -0.2314790158712601, 0.5244939240922365, 0.051163570728433076},
    {0.8193433888191203, -0.2314790158712601, -0.5244939240922365, 0.051163570728433076},
    {-0.8193433888191203, 0.2314790158712601, -0.5244939240922365, 0.051163570728433076},
    {-0.8193433888191203, -0.2314790158712601, -0.5244939240922365, 0.051163570728433076},
    {0.8193433888191203, 0.5244939240922365, 0.2314790158712601, 0.051163570728433076},
    {-0.8193433888191203, 0.5244939240922365, 0.2314790158712601, 0.051163570728433076},
    {0.8193433888191203, -0.5244939240922365, 0.2314790158712601, 0.051163570728433076},
    {0.8193433888191203, 0.5244939240922365, -0.2314790158712601, 0.051163570728433076},
    {-0.8193433888191203, -0.5244939240922365, 0.2314790158712601, 0.051163570728433076},
    {0.8193433888191203, -0.5244939240922365, -0.2314790158712601, 0.051163570728433076},
    {-0.8193433888191203, 0.5244939240922365, -0.2314790158712601, 0.051163570728433076},
    {-0.8193433888191203, -0.5244939240922365, -0.2314790158712601, 0.051163570728433076},
    {0.2314790158712601, 0.8193433888191203, 0.5244939240922365, 0.051163570728433076},
    {-0.2314790158712601, 0.8193433888191203, 0.5244939240922365, 0.051163570728433076},
    {0.2314790158712601, -0.8193433888191203, 0.5244939240922365, 0.051163570728433076},
    {0.2314790158712601, 0.8193433888191203, -0.5244939240922365, 0.051163570728433076},
    {-0.2314790158712601, -0.8193433888191203, 0.5244939240922365, 0.051163570728433076},
    {0.2314790158712601, -0.8193433888191203, -0.5244939240922365, 0.051163570728433076},
    {-0.2314790158712601, 0.8193433888191203, -0.5244939240922365, 0.051163570728433076},
    {-0.2314790158712601, -0.8193433888191203, -0.5244939240922365, 0.051163570728433076},
    {0.5244939240922365, 0.8193433888191203, 0.2314790158712601, 0.051163570728433076},
    {-0.5244939240922365, 0.8193433888191203, 0.2314790158712601, 0.051163570728433076},
    {0.5244939240922365, -0.8193433888191203, 0.2314790158712601, 0.051163570728433076},
    {0.5244939240922365, 0.8193433888191203, -0.2314790158712601, 0.051163570728433076},
    {-0.5244939240922365, -0.8193433888191203, 0.2314790158712601, 0.051163570728433076},
    {0.5244939240922365, -0.8193433888191203, -0.2314790158712601, 0.051163570728433076},
    {-0.5244939240922365, 0.8193433888191203, -0.2314790158712601, 0.051163570728433076},
    {-0.5244939240922365, -0.8193433888191203, -0.2314790158712601, 0.051163570728433076},
};

static const double kLeb29[302][4] = {
    {1.0, 0.0, 0.0, 0.010739109397555787},
    {-1.0, 0.0, 0.0, 0.010739109397555787},
    {0.0, 1.0, 0.0, 0.010739109397555787},
    {0.0, -1.0, 0.0, 0.010739109397555787},
    {0.0, 0.0, 1.0, 0.010739109397555787},
    {0.0, 0.0, -1.0, 0.010739109397555787},
    {0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.04522786682091873},
    {-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.04522786682091873},
    {0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.04522786682091873},
    {0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.04522786682091873},
    {-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.04522786682091873},
    {0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.04522786682091873},
    {-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.04522786682091873},
    {-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.04522786682091873},
    {0.3515640345570105, 0.3515640345570105, 0.8676436245440834, 0.04335131988095388},
    {-0.3515640345570105, 0.3515640345570105, 0.8676436245440834, 0.04335131988095388},
    {0.3515640345570105, -0.3515640345570105, 0.8676436245440834, 0.04335131988095388},
    {0.3515640345570105, 0.3515640345570105, -0.8676436245440834, 0.04335131988095388},
    {-0.3515640345570105, -0.3515640345570105, 0.8676436245440834, 0.04335131988095388},
    {-0.3515640345570105, 0.3515640345570105, -0.8676436245440834, 0.04335131988095388},
    {0.3515640345570105, -0.3515640345570105, -0.8676436245440834, 0.04335131988095388},
    {-0.3515640345570105, -0.3515640345570105, -0.8676436245440834, 0.04335131988095388},
    {-0.3515640345570105, 0.8676436245440834, 0.3515640345570105, 0.04335131988095388},
    {0.3515640345570105, -0.8676436245440834, 0.3515640345570105, 0.04335131988095388},
    {0.3515640345570105, 0.8676436245440834, -0.3515640345570105, 0.04335131988095388},
    {-0.3515640345570105, -0.8676436245440834, 0.3515640345570105, 0.04335131988095388},
    {-0.3515640345570105, 0.8676436245440834, -0.3515640345570105, 0.04335131988095388},
    {0.3515640345570105, -0.8676436245440834, -0.3515640345570105, 0.04335131988095388},
    {-0.3515640345570105, -0.8676436245440834, -0.3515640345570105, 0.04335131988095388},
    {0.3515640345570105, 0.8676436245440834, 0.3515640345570105, 0.04335131988095388},
    {0.8676436245440834, 0.3515640345570105, 0.3515640345570105, 0.04335131988095388},
    {-0.8676436245440834, 0.3515640345570105, 0.3515640345570105, 0.04335131988095388},
    {0.8676436245440834, -0.3515640345570105, 0.3515640345570105, 0.04335131988095388},
    {0.8676436245440834, 0.3515640345570105, -0.3515640345570105, 0.04335131988095388},
    {-0.8676436245440834, -0.3515640345570105, 0.3515640345570105, 0.04335131988095388},
    {-0.8676436245440834, 0.3515640345570105, -0.3515640345570105, 0.04335131988095388},
    {0.8676436245440834, -0.3515640345570105, -0.3515640345570105, 0.04335131988095388},
    {-0.8676436245440834, -0.3515640345570105, -0.3515640345570105, 0.04335131988095388},
    {0.6566329410219612, 0.6566329410219612, 0.37103417838482095, 0.04529953680846059},
    {-0.6566329410219612, 0.6566329410219612, 0.37103417838482095, 0.04529953680846059},
    {0.6566329410219612, -0.6566329410219612, 0.37103417838482095, 0.04529953680846059},
    {0.6566329410219612, 0.6566329410219612, -0.37103417838482095, 0.04529953680846059},
    {-0.6566329410219612, -0.6566329410219612, 0.37103417838482095, 0.04529953680846059},
    {-0.6566329410219612, 0.6566329410219612, -0.37103417838482095, 0.04529953680846059},
    {0.6566329410219612, -0.6566329410219612, -0.37103417838482095, 0.04529953680846059},
    {-0.6566329410219612, -0.6566329410219612, -0.37103417838482095, 0.04529953680846059},
    {-0.6566329410219612, 0.37103417838482095, 0.6566329410219612, 0.04529953680846059},
    {0.6566329410219612, -0.37103417838482095, 0.6566329410219612, 0.04529953680846059},
    {0.6566329410219612, 0.37103417838482095, -0.6566329410219612, 0.04529953680846059},
    {-0.6566329410219612, -0.37103417838482095, 0.6566329410219612, 0.04529953680846059},
    {-0.6566329410219612, 0.37103417838482095, -0.6566329410219612, 0.04529953680846059},
    {0.6566329410219612, -0.37103417838482095, -0.6566329410219612, 0.04529953680846059},
    {-0.6566329410219612, -0.37103417838482095, -0.6566329410219612, 0.04529953680846059},
    {0.6566329410219612, 0.37103417838482095, 0.6566329410219612, 0.04529953680846059},
    {0.37103417838482095, 0.6566329410219612, 0.6566329410219612, 0.04529953680846059},
    {-0.37103417838482095, 0.6566329410219612, 0.6566329410219612, 0.04529953680846059},
    {0.37103417838482095, -0.6566329410219612, 0.6566329410219612, 0.04529953680846059},
    {0.37103417838482095, 0.6566329410219612, -0.6566329410219612, 0.04529953680846059},
    {-0.37103417838482095, -0.6566329410219612, 0.6566329410219612, 0.04529953680846059},
    {-0.37103417838482095, 0.6566329410219612, -0.6566329410219612, 0.04529953680846059},
    {0.37103417838482095, -0.6566329410219612, -0.6566329410219612, 0.04529953680846059},
    {-0.37103417838482095, -0.6566329410219612, -0.6566329410219612, 0.04529953680846059},
    {0.4729054132581005, 0.4729054132581005, 0.7434520429875557, 0.04494651051683867},
    {-0.4729054132581005, 0.4729054132581005, 0.7434520429875557, 0.04494651051683867},
    {0.4729054132581005, -0.4729054132581005, 0.7434520429875557, 0.04494651051683867},
    {0.4729054132581005, 0.4729054132581005, -0.7434520429875557, 0.04494651051683867},
    {-0.4729054132581005, -0.4729054132581005, 0.7434520429875557, 0.04494651051683867},
    {-0.4729054132581005, 0.4729054132581005, -0.7434520429875557, 0.04494651051683867},
    {0.4729054132581005, -0.4729054132581005, -0.7434520429875557, 0.04494651051683867},
    {-0.4729054132581005, -0.4729054132581005, -0.7434520429875557, 0.04494651051683867},
    {-0.4729054132581005, 0.7434520429875557, 0.4729054132581005, 0.04494651051683867},
    {0.4729054132581005, -0.7434520429875557, 0.4729054132581005, 0.04494651051683867},
    {0.4729054132581005, 0.7434520429875557, -0.4729054132581005, 0.04494651051683867},
    {-0.4729054132581005, -0.7434520429875557, 0.4729054132581005, 0.04494651051683867},
    {-0.4729054132581005, 0.7434520429875557, -0.4729054132581005, 0.04494651051683867},
    {0.4729054132581005, -0.7434520429875557, -0.4729054132581005, 0.04494651051683867},
    {-0.4729054132581005, -0.7434520429875557, -0.4729054132581005, 0.04494651051683867},
    {0.4729054132581005, 0.7434520429875557, 0.4729054132581005, 0.04494651051683867},
    {0.7434520429875557, 0.4729054132581005, 0.4729054132581005, 0.04494651051683867},
    {-0.7434520429875557, 0.4729054132581005, 0.4729054132581005, 0.04494651051683867},
    {0.7434520429875557, -0.4729054132581005, 0.4729054132581005, 0.04494651051683867},
    {0.7434520429875557, 0.4729054132581005, -0.4729054132581005, 0.04494651051683867},
    {-0.7434520429875557, -0.4729054132581005, 0.4729054132581005, 0.04494651051683867},
    {-0.7434520429875557, 0.4729054132581005, -0.4729054132581005, 0.04494651051683867},
    {0.7434520429875557, -0.4729054132581005, -0.4729054132581005, 0.04494651051683867},
    {-0.7434520429875557, -0.4729054132581005, -0.4729054132581005, 0.04494651051683867},
    {0.09618308522614784, 0.09618308522614784, 0.9907056213794081, 0.029557378086976182},
    {-0.09618308522614784, 0.09618308522614784, 0.9907056213794081, 0.029557378086976182},
    {0.09618308522614784, -0.09618308522614784, 0.9907056213794081, 0.029557378086976182},
    {0.09618308522614784, 0.09618308522614784, -0.9907056213794081, 0.029557378086976182},
    {-0.09618308522614784, -0.09618308522614784, 0.9907056213794081, 0.029557378086976182},
    {-0.09618308522614784, 0.09618308522614784, -0.9907056213794081, 0.029557378086976182},
    {0.09618308522614784, -0.09618308522614784, -0.9907056213794081, 0.029557378086976182},
    {-0.09618308522614784, -0.09618308522614784, -0.9907056213794081, 0.029557378086976182},
    {-0.09618308522614784, 0.9907056213794081, 0.09618308522614784, 0.029557378086976182},
    {0.09618308522614784, -0.9907056213794081, 0.09618308522614784, 0.029557378086976182},
    {0.09618308522614784, 0.9907056213794081, -0.09618308522614784, 0.029557378086976182},
    {-0.09618308522614784, -0.9907056213794081, 0.09618308522614784, 0.029557378086976182},
    {-0.09618308522614784, 0.9907056213794081, -0.09618308522614784, 0.029557378086976182},
    {0.09618308522614784, -0.9907056213794081, -0.09618308522614784, 0.029557378086976182},
    {-0.09618308522614784, -0.9907056213794081, -0.09618308522614784, 0.029557378086976182},
    {0.09618308522614784, 0.9907056213794081, 0.09618308522614784, 0.029557378086976182},
    {0.9907056213794081, 0.09618308522614784, 0.09618308522614784, 0.029557378086976182},
    {-0.9907056213794081, 0.09618308522614784, 0.09618308522614784, 0.029557378086976182},
    {0.9907056213794081, -0.09618308522614784, 0.09618308522614784, 0.029557378086976182},
    {0.9907056213794081, 0.09618308522614784, -0.09618308522614784, 0.029557378086976182},
    {-0.9907056213794081, -0.09618308522614784, 0.09618308522614784, 0.029557378086976182},
    {-0.9907056213794081, 0.09618308522614784, -0.09618308522614784, 0.029557378086976182},
    {0.9907056213794081, -0.09618308522614784, -0.09618308522614784, 0.029557378086976182},
    {-0.9907056213794081, -0.09618308522614784, -0.09618308522614784, 0.029557378086976182},
    {0.2219645236294178, 0.2219645236294178, 0.9494543172264431, 0.0390682571589194},
    {-0.2219645236294178, 0.2219645236294178, 0.9494543172264431, 0.0390682571589194},
    {0.2219645236294178, -0.2219645236294178, 0.9494543172264431, 0.0390682571589194},
    {0.2219645236294178, 0.2219645236294178, -0.9494543172264431, 0.0390682571589194},
    {-0.2219645236294178, -0.2219645236294178, 0.9494543172264431, 0.0390682571589194},
    {-0.2219645236294178, 0.2219645236294178, -0.9494543172264431, 0.0390682571589194},
    {0.2219645236294178, -0.2219645236294178, -0.9494543172264431, 0.0390682571589194},
    {-0.2219645236294178, -0.2219645236294178, -0.9494543172264431, 0.0390682571589194},
    {-0.2219645236294178, 0.9494543172264431, 0.2219645236294178, 0.0390682571589194},
    {0.2219645236294178, -0.9494543172264431, 0.2219645236294178, 0.0390682571589194},
    {0.2219645236294178, 0.9494543172264431, -0.2219645236294178, 0.0390682571589194},
    {-0.2219645236294178, -0.9494543172264431, 0.2219645236294178, 0.0390682571589194},
    {-0.2219645236294178, 0.9494543172264431, -0.2219645236294178, 0.0390682571589194},
    {0.2219645236294178, -0.9494543172264431, -0.2219645236294178, 0.0390682571589194},
    {-0.2219645236294178, -0.9494543172264431, -0.2219645236294178, 0.0390682571589194},
    {0.2219645236294178, 0.9494543172264431, 0.2219645236294178, 0.0390682571589194},
    {0.9494543172264431, 0.2219645236294178, 0.2219645236294178, 0.0390682571589194},
    {-0.9494543172264431, 0.2219645236294178, 0.2219645236294178, 0.0390682571589194},
    {0.9494543172264431, -0.2219645236294178, 0.2219645236294178, 0.0390682571589194},
    {0.9494543172264431, 0.2219645236294178, -0.2219645236294178, 0.0390682571589194},
    {-0.9494543172264431, -0.2219645236294178, 0.2219645236294178, 0.0390682571589194},
    {-0.9494543172264431, 0.2219645236294178, -0.2219645236294178, 0.0390682571589194},
    {0.9494543172264431, -0.2219645236294178, -0.2219645236294178, 0.0390682571589194},
    {-0.9494543172264431, -0.2219645236294178, -0.2219645236294178, 0.0390682571589194},
    {0.7011766416089545, 0.7011766416089545, 0.12923867271051442, 0.04586782837866035},
    {-0.7011766416089545, 0.7011766416089545, 0.12923867271051442, 0.04586782837866035},
    {0.7011766416089545, -0.7011766416089545, 0.12923867271051442, 0.04586782837866035},
    {0.7011766416089545, 0.7011766416089545, -0.12923867271051442, 0.04586782837866035},
    {-0.7011766416089545, -0.7011766416089545, 0.12923867271051442, 0.04586782837866035},
    {-0.7011766416089545, 0.7011766416089545, -0.12923867271051442, 0.04586782837866035},
    {0.7011766416089545, -0.7011766416089545, -0.12923867271051442, 0.04586782837866035},
    {-0.7011766416089545, -0.7011766416089545, -0.12923867271051442, 0.04586782837866035},
    {-0.7011766416089545, 0.12923867271051442, 0.7011766416089545, 0.04586782837866035},
    {0.7011766416089545, -0.12923867271051442, 0.7011766416089545, 0.04586782837866035},
    {0.7011766416089545, 0.12923867271051442, -0.7011766416089545, 0.04586782837866035},
    {-0.7011766416089545, -0.12923867271051442, 0.7011766416089545, 0.04586782837866035},
    {-0.7011766416089545, 0.12923867271051442, -0.7011766416089545, 0.04586782837866035},
    {0.7011766416089545, -0.12923867271051442, -0.7011766416089545, 0.04586782837866035},
    {-0.7011766416089545, -0.12923867271051442, -0.7011766416089545, 0.04586782837866035},
    {0.7011766416089545, 0.12923867271051442, 0.7011766416089545, 0.04586782837866035},
    {0.12923867271051442, 0.7011766416089545, 0.7011766416089545, 0.04586782837866035},
    {-0.12923867271051442, 0.7011766416089545, 0.7011766416089545, 0.04586782837866035},
    {0.12923867271051442, -0.7011766416089545, 0.7011766416089545, 0.04586782837866035},
    {0.12923867271051442, 0.7011766416089545, -0.7011766416089545, 0.04586782837866035},
    {-0.12923867271051442, -0.7011766416089545, 0.7011766416089545, 0.04586782837866035},
    {-0.12923867271051442, 0.7011766416089545, -0.7011766416089545, 0.04586782837866035},
    {0.12923867271051442, -0.7011766416089545, -0.7011766416089545, 0.04586782837866035},
    {-0.12923867271051442, -0.7011766416089545, -0.7011766416089545, 0.04586782837866035},
    {0.2644152887060663, 0.964408914879206, 0.0, 0.03747725210708425},
    {-0.2644152887060663, 0.964408914879206, 0.0, 0.03747725210708425},
    {0.2644152887060663, -0.964408914879206, 0.0, 0.03747725210708425},
    {-0.2644152887060663, -0.964408914879206, 0.0, 0.03747725210708425},
    {0.964408914879206, 0.2644152887060663, 0.0, 0.03747725210708425},
    {-0.964408914879206, 0.2644152887060663, 0.0, 0.03747725210708425},
    {0.964408914879206, -0.2644152887060663, 0.0, 0.03747725210708425},
    {-0.964408914879206, -0.2644152887060663, 0.0, 0.03747725210708425},
    {0.2644152887060663, 0.0, 0.964408914879206, 0.03747725210708425},
    {-0.2644152887060663, 0.0, 0.964408914879206, 0.03747725210708425},
    {0.2644152887060663, 0.0, -0.964408914879206, 0.03747725210708425},
    {-0.2644152887060663, 0.0, -0.964408914879206, 0.03747725210708425},
    {0.964408914879206, 0.0, 0.2644152887060663, 0.03747725210708425},
    {-0.964408914879206, 0.0, 0.2644152887060663, 0.03747725210708425},
    {0.964408914879206, 0.0, -0.2644152887060663, 0.03747725210708425},
    {-0.964408914879206, 0.0, -0.2644152887060663, 0.03747725210708425},
    {0.0, 0.2644152887060663, 0.964408914879206, 0.03747725210708425},
    {0.0, -0.2644152887060663, 0.964408914879206, 0.03747725210708425},
    {0.0, 0.2644152887060663, -0.964408914879206, 0.03747725210708425},
    {0.0, -0.2644152887060663, -0.964408914879206, 0.03747725210708425},
    {0.0, 0.964408914879206, 0.2644152887060663, 0.03747725210708425},
    {0.0, -0.964408914879206, 0.2644152887060663, 0.03747725210708425},
    {0.0, 0.964408914879206, -0.2644152887060663, 0.03747725210708425},
    {0.0, -0.964408914879206, -0.2644152887060663, 0.03747725210708425},
    {0.5718955891878961, 0.8203264198277593, 0.0, 0.045249250350174325},
    {-0.5718955891878961, 0.8203264198277593, 0.0, 0.045249250350174325},
    {0.5718955891878961, -0.8203264198277593, 0.0, 0.045249250350174325},
    {-0.5718955891878961, -0.8203264198277593, 0.0, 0.045249250350174325},
    {0.8203264198277593, 0.5718955891878961, 0.0, 0.045249250350174325},
    {-0.8203264198277593, 0.5718955891878961, 0.0, 0.045249250350174325},
    {0.8203264198277593, -0.5718955891878961, 0.0, 0.045249250350174325},
    {-0.8203264198277593, -0.5718955891878961, 0.0, 0.045249250350174325},
    {0.5718955891878961, 0.0, 0.8203264198277593, 0.045249250350174325},
    {-0.5718955891878961, 0.0, 0.8203264198277593, 0.045249250350174325},
    {0.5718955891878961, 0.0, -0.8203264198277593, 0.045249250350174325},
    {-0.5718955891878961, 0.0, -0.8203264198277593, 0.045249250350174325},
    {0.8203264198277593, 0.0, 0.5718955891878961, 0.045249250350174325},
    {-0.8203264198277593, 0.0, 0.5718955891878961, 0.045249250350174325},
    {0.8203264198277593, 0.0, -0.5718955891878961, 0.045249250350174325},
    {-0.8203264198277593, 0.0, -0.5718955891878961, 0.045249250350174325},
    {0.0, 0.5718955891878961, 0.8203264198277593, 0.045249250350174325},
    {0.0, -0.5718955891878961, 0.8203264198277593, 0.045249250350174325},
    {0.0, 0.5718955891878961, -0.8203264198277593, 0.045249250350174325},
    {0.0, -0.5718955891878961, -0.8203264198277593, 0.045249250350174325},
    {0.0, 0.8203264198277593, 0.5718955891878961, 0.045249250350174325},
    {0.0, -0.8203264198277593, 0.5718955891878961, 0.045249250350174325},
    {0.0, 0.8203264198277593, -0.5718955891878961, 0.045249250350174325},
    {0.0, -0.8203264198277593, -0.5718955891878961, 0.045249250350174325},
    {0.2510034751770465, 0.8000727494073951, 0.5448677372580774, 0.044881302269213164},
    {-0.2510034751770465, 0.8000727494073951, 0.5448677372580774, 0.044881302269213164},
    {0.2510034751770465, -0.8000727494073951, 0.5448677372580774, 0.044881302269213164},
    {0.2510034751770465, 0.8000727494073951, -0.5448677372580774, 0.044881302269213164},
    {-0.2510034751770465, -0.8000727494073951, 0.5448677372580774, 0.044881302269213164},
    {0.2510034751770465, -0.8000727494073951, -0.5448677372580774, 0.044881302269213164},
    {-0.2510034751770465, 0.8000727494073951, -0.5448677372580774, 0.044881302269213164},
    {-0.2510034751770465, -0.8000727494073951, -0.5448677372580774, 0.044881302269213164},
    {0.8000727494073951, 0.2510034751770465, 0.5448677372580774, 0.044881302269213164},
    {-0.8000727494073951, 0.2510034751770465, 0.5448677372580774, 0.044881302269213164},
    {0.8000727494073951, -0.2510034751770465, 0.5448677372580774, 0.044881302269213164},
    {0.8000727494073951, 0.2510034751770465, -0.5448677372580774, 0.044881302269213164},
    {-0.8000727494073951, -0.2510034751770465, 0.5448677372580774, 0.044881302269213164},
    {0.8000727494073951, -0.2510034751770465, -0.5448677372580774, 0.044881302269213164},
    {-0.8000727494073951, 0.2510034751770465, -0.5448677372580774, 0.044881302269213164},
    {-0.8000727494073951, -0.2510034751770465, -0.5448677372580774, 0.044881302269213164},
    {0.5448677372580774, 0.2510034751770465, 0.8000727494073951, 0.044881302269213164},
    {-0.5448677372580774, 0.2510034751770465, 0.8000727494073951, 0.044881302269213164},
    {0.5448677372580774, -0.2510034751770465, 0.8000727494073951, 0.044881302269213164},
    {0.5448677372580774, 0.2510034751770465, -0.8000727494073951, 0.044881302269213164},
    {-0.5448677372580774, -0.2510034751770465, 0.8000727494073951, 0.044881302269213164},
    {0.5448677372580774, -0.2510034751770465, -0.8000727494073951, 0.044881302269213164},
    {-0.5448677372580774, 0.2510034751770465, -0.8000727494073951, 0.044881302269213164},
    {-0.5448677372580774, -0.2510034751770465, -0.8000727494073951, 0.044881302269213164},
    {0.5448677372580774, 0.8000727494073951, 0.2510034751770465, 0.044881302269213164},
    {-0.5448677372580774, 0.8000727494073951, 0.2510034751770465, 0.044881302269213164},
    {0.5448677372580774, -0.8000727494073951, 0.2510034751770465, 0.044881302269213164},
    {0.5448677372580774, 0.8000727494073951, -0.2510034751770465, 0.044881302269213164},
    {-0.5448677372580774, -0.8000727494073951, 0.2510034751770465, 0.044881302269213164},
    {0.5448677372580774, -0.8000727494073951, -0.2510034751770465, 0.044881302269213164},
    {-0.5448677372580774, 0.8000727494073951, -0.2510034751770465, 0.044881302269213164},
    {-0.5448677372580774, -0.8000727494073951, -0.2510034751770465, 0.044881302269213164},
    {0.2510034751770465, 0.5448677372580774, 0.8000727494073951, 0.044881302269213164},
    {-0.2510034751770465, 0.5448677372580774, 0.8000727494073951, 0.044881302269213164},
    {0.2510034751770465, -0.5448677372580774, 0.8000727494073951, 0.044881302269213164},
    {0.2510034751770465, 0.5448677372580774, -0.8000727494073951, 0.044881302269213164},
    {-0.2510034751770465, -0.5448677372580774, 0.8000727494073951, 0.044881302269213164},
    {0.2510034751770465, -0.5448677372580774, -0.8000727494073951, 0.044881302269213164},
    {-0.2510034751770465, 0.5448677372580774, -0.8000727494073951, 0.044881302269213164},
    {-0.2510034751770465, -0.5448677372580774, -0.8000727494073951, 0.044881302269213164},
    {0.8000727494073951, 0.5448677372580774, 0.2510034751770465, 0.044881302269213164},
    {-0.8000727494073951, 0.5448677372580774, 0.2510034751770465, 0.044881302269213164},
    {0.8000727494073951, -0.5448677372580774, 0.2510034751770465, 0.044881302269213164},
    {0.8000727494073951, 0.5448677372580774, -0.2510034751770465, 0.044881302269213164},
    {-0.8000727494073951, -0.5448677372580774, 0.2510034751770465, 0.044881302269213164},
    {0.8000727494073951, -0.5448677372580774, -0.2510034751770465, 0.044881302269213164},
    {-0.8000727494073951, 0.5448677372580774, -0.2510034751770465, 0.044881302269213164},
    {-0.8000727494073951, -0.5448677372580774, -0.2510034751770465, 0.044881302269213164},
    {0.1233548532583327, 0.4127724083168531, 0.9024425295330004, 0.0426290524077215},
    {-0.1233548532583327, 0.4127724083168531, 0.9024425295330004, 0.0426290524077215},
    {0.1233548532583327, -0.4127724083168531, 0.9024425295330004, 0.0426290524077215},
    {0.1233548532583327, 0.4127724083168531, -0.9024425295330004, 0.0426290524077215},
    {-0.1233548532583327, -0.4127724083168531, 0.9024425295330004, 0.0426290524077215},
    {0.1233548532583327, -0.4127724083168531, -0.9024425295330004, 0.0426290524077215},
    {-0.1233548532583327, 0.4127724083168531, -0.9024425295330004, 0.0426290524077215},
    {-0.1233548532583327, -0.4127724083168531, -0.9024425295330004, 0.0426290524077215},
    {0.4127724083168531, 0.1233548532583327, 0.9024425295330004, 0.0426290524077215},
    {-0.4127724083168531, 0.1233548532583327, 0.9024425295330004, 0.0426290524077215},
    {0.4127724083168531, -0.1233548532583327, 0.9024425295330004, 0.0426290524077215},
    {0.4127724083168531, 0.1233548532583327, -0.9024425295330004, 0.0426290524077215},
    {-0.4127724083168531, -0.1233548532583327, 0.9024425295330004, 0.0426290524077215},
    {0.4127724083168531, -0.1233548532583327, -0.9024425295330004, 0.0426290524077215},
    {-0.4127724083168531, 0.1233548532583327, -0.9024425295330004, 0.0426290524077215},
    {-0.4127724083168531, -0.1233548532583327, -0.9024425295330004, 0.0426290524077215},
    {0.9024425295330004, 0.1233548532583327, 0.4127724083168531, 0.0426290524077215},
    {-0.9024425295330004, 0.1233548532583327, 0.4127724083168531, 0.0426290524077215},
    {0.9024425295330004, -0.1233548532583327, 0.4127724083168531, 0.0426290524077215},
    {0.9024425295330004, 0.1233548532583327, -0.4127724083168531, 0.0426290524077215},
    {-0.9024425295330004, -0.1233548532583327, 0.4127724083168531, 0.0426290524077215},
    {0.9024425295330004, -0.1233548532583327, -0.4127724083168531, 0.0426290524077215},
    {-0.9024425295330004, 0.1233548532583327, -0.4127724083168531, 0.0426290524077215},
    {-0.9024425295330004, -0.1233548532583327, -0.4127724083168531, 0.0426290524077215},
    {0.9024425295330004, 0.4127724083168531, 0.1233548532583327, 0.0426290524077215},
    {-0.9024425295330004, 0.4127724083168531, 0.1233548532583327, 0.0426290524077215},
    {0.9024425295330004, -0.4127724083168531, 0.1233548532583327, 0.0426290524077215},
    {0.9024425295330004, 0.4127724083168531, -0.1233548532583327, 0.0426290524077215},
    {-0.9024425295330004, -0.4127724083168531, 0.1233548532583327, 0.0426290524077215},
    {0.9024425295330004, -0.4127724083168531, -0.1233548532583327, 0.0426290524077215},
    {-0.9024425295330004, 0.4127724083168531, -0.1233548532583327, 0.0426290524077215},
    {-0.9024425295330004, -0.4127724083168531, -0.1233548532583327, 0.0426290524077215},
    {0.1233548532583327, 0.9024425295330004, 0.4127724083168531, 0.0426290524077215},
    {-0.1233548532583327, 0.9024425295330004, 0.4127724083168531, 0.0426290524077215},
    {0.1233548532583327, -0.9024425295330004, 0.4127724083168531, 0.0426290524077215},
    {0.1233548532583327, 0.9024425295330004, -0.4127724083168531, 0.0426290524077215},
    {-0.1233548532583327, -0.9024425295330004, 0.4127724083168531, 0.0426290524077215},
    {0.1233548532583327, -0.9024425295330004, -0.4127724083168531, 0.0426290524077215},
    {-0.1233548532583327, 0.9024425295330004, -0.4127724083168531, 0.0426290524077215},
    {-0.1233548532583327, -0.9024425295330004, -0.4127724083168531, 0.0426290524077215},
    {0.4127724083168531, 0.9024425295330004, 0.1233548532583327, 0.0426290524077215},
    {-0.4127724083168531, 0.9024425295330004, 0.1233548532583327, 0.0426290524077215},
    {0.4127724083168531, -0.9024425295330004, 0.1233548532583327, 0.0426290524077215},
    {0.4127724083168531, 0.9024425295330004, -0.1233548532583327, 0.0426290524077215},
    {-0.4127724083168531, -0.9024425295330004, 0.1233548532583327, 0.0426290524077215},
    {0.4127724083168531, -0.9024425295330004, -0.1233548532583327, 0.0426290524077215},
    {-0.4127724083168531, 0.9024425295330004, -0.1233548532583327, 0.0426290524077215},
    {-0.4127724083168531, -0.9024425295330004, -0.1233548532583327, 0.0426290524077215},
};

static const double kLeb31[350][4] = {
    {1.0, 0.0, 0.0, 0.03778452231568862},
    {-1.0, 0.0, 0.0, 0.03778452231568862},
    {0.0, 1.0, 0.0, 0.03778452231568862},
    {0.0, -1.0, 0.0, 0.03778452231568862},
    {0.0, 0.0, 1.0, 0.03778452231568862},
    {0.0, 0.0, -1.0, 0.03778452231568862},
    {0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.038335318858294616},
    {-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.038335318858294616},
    {0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.038335318858294616},
    {0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.038335318858294616},
    {-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.038335318858294616},
    {0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.038335318858294616},
    {-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.038335318858294616},
    {-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.038335318858294616},
    {0.7068965463912316, 0.7068965463912316, 0.024383301669355525, 0.020371401211874047},
    {-0.7068965463912316, 0.7068965463912316, 0.024383301669355525, 0.020371401211874047},
    {0.7068965463912316, -0.7068965463912316, 0.024383301669355525, 0.020371401211874047},
    {0.7068965463912316, 0.7068965463912316, -0.024383301669355525, 0.020371401211874047},
    {-0.7068965463912316, -0.7068965463912316, 0.024383301669355525, 0.020371401211874047},
    {-0.7068965463912316, 0.7068965463912316, -0.024383301669355525, 0.020371401211874047},
    {0.7068965463912316, -0.7068965463912316, -0.024383301669355525, 0.020371401211874047},
    {-0.7068965463912316, -0.7068965463912316, -0.024383301669355525, 0.020371401211874047},
    {-0.7068965463912316, 0.024383301669355525, 0.7068965463912316, 0.020371401211874047},
    {0.7068965463912316, -0.024383301669355525, 0.7068965463912316, 0.020371401211874047},
    {0.7068965463912316, 0.024383301669355525, -0.7068965463912316, 0.020371401211874047},
    {-0.7068965463912316, -0.024383301669355525, 0.7068965463912316, 0.020371401211874047},
    {-0.7068965463912316, 0.024383301669355525, -0.7068965463912316, 0.020371401211874047},
    {0.7068965463912316, -0.024383301669355525, -0.7068965463912316, 0.020371401211874047},
    {-0.7068965463912316, -0.024383301669355525, -0.7068965463912316, 0.020371401211874047},
    {0.7068965463912316, 0.024383301669355525, 0.7068965463912316, 0.020371401211874047},
    {0.024383301669355525, 0.7068965463912316, 0.7068965463912316, 0.020371401211874047},
    {-0.024383301669355525, 0.7068965463912316, 0.7068965463912316, 0.020371401211874047},
    {0.024383301669355525, -0.7068965463912316, 0.7068965463912316, 0.020371401211874047},
    {0.024383301669355525, 0.7068965463912316, -0.7068965463912316, 0.020371401211874047},
    {-0.024383301669355525, -0.7068965463912316, 0.7068965463912316, 0.020371401211874047},
    {-0.024383301669355525, 0.7068965463912316, -0.7068965463912316, 0.020371401211874047},
    {0.024383301669355525, -0.7068965463912316, -0.7068965463912316, 0.020371401211874047},
    {-0.024383301669355525, -0.7068965463912316, -0.7068965463912316, 0.020371401211874047},
    {0.4794682625712025, 0.4794682625712025, 0.7349968505877456, 0.037770758815405106},
    {-0.4794682625712025, 0.4794682625712025, 0.7349968505877456, 0.037770758815405106},
    {0.4794682625712025, -0.4794682625712025, 0.7349968505877456, 0.037770758815405106},
    {0.4794682625712025, 0.4794682625712025, -0.7349968505877456, 0.037770758815405106},
    {-0.4794682625712025, -0.4794682625712025, 0.7349968505877456, 0.037770758815405106},
    {-0.4794682625712025, 0.4794682625712025, -0.7349968505877456, 0.037770758815405106},
    {0.4794682625712025, -0.4794682625712025, -0.7349968505877456, 0.037770758815405106},
    {-0.4794682625712025, -0.4794682625712025, -0.7349968505877456, 0.037770758815405106},
    {-0.4794682625712025, 0.7349968505877456, 0.4794682625712025, 0.037770758815405106},
    {0.4794682625712025, -0.7349968505877456, 0.4794682625712025, 0.037770758815405106},
    {0.4794682625712025, 0.7349968505877456, -0.4794682625712025, 0.037770758815405106},
    {-0.4794682625712025, -0.7349968505877456, 0.4794682625712025, 0.037770758815405106},
    {-0.4794682625712025, 0.7349968505877456, -0.4794682625712025, 0.037770758815405106},
    {0.4794682625712025, -0.7349968505877456, -0.4794682625712025, 0.037770758815405106},
    {-0.4794682625712025, -0.7349968505877456, -0.4794682625712025, 0.037770758815405106},
    {0.4794682625712025, 0.7349968505877456, 0.4794682625712025, 0.037770758815405106},
    {0.7349968505877456, 0.4794682625712025, 0.4794682625712025, 0.037770758815405106},
    {-0.7349968505877456, 0.4794682625712025, 0.4794682625712025, 0.037770758815405106},
    {0.7349968505877456, -0.4794682625712025, 0.4794682625712025, 0.037770758815405106},
    {0.7349968505877456, 0.4794682625712025, -0.4794682625712025, 0.037770758815405106},
    {-0.7349968505877456, -0.4794682625712025, 0.4794682625712025, 0.037770758815405106},
    {-0.7349968505877456, 0.4794682625712025, -0.4794682625712025, 0.037770758815405106},
    {0.7349968505877456, -0.4794682625712025, -0.4794682625712025, 0.037770758815405106},
    {-0.7349968505877456, -0.4794682625712025, -0.4794682625712025, 0.037770758815405106},
    {0.1927533154878019, 0.1927533154878019, 0.9621290551360144, 0.03758592063240899},
    {-0.1927533154878019, 0.1927533154878019, 0.9621290551360144, 0.03758592063240899},
    {0.1927533154878019, -0.1927533154878019, 0.9621290551360144, 0.03758592063240899},
    {0.1927533154878019, 0.1927533154878019, -0.9621290551360144, 0.03758592063240899},
    {-0.1927533154878019, -0.1927533154878019, 0.9621290551360144, 0.03758592063240899},
    {-0.1927533154878019, 0.1927533154878019, -0.9621290551360144, 0.03758592063240899},
    {0.1927533154878019, -0.1927533154878019, -0.9621290551360144, 0.03758592063240899},
    {-0.1927533154878019, -0.1927533154878019, -0.9621290551360144, 0.03758592063240899},
    {-0.1927533154878019, 0.9621290551360144, 0.1927533154878019, 0.03758592063240899},
    {0.1927533154878019, -0.9621290551360144, 0.1927533154878019, 0.03758592063240899},
    {0.1927533154878019, 0.9621290551360144, -0.1927533154878019, 0.03758592063240899},
    {-0.1927533154878019, -0.9621290551360144, 0.1927533154878019, 0.03758592063240899},
    {-0.1927533154878019, 0.9621290551360144, -0.1927533154878019, 0.03758592063240899},
    {0.1927533154878019, -0.9621290551360144, -0.1927533154878019, 0.03758592063240899},
    {-0.1927533154878019, -0.9621290551360144, -0.1927533154878019, 0.03758592063240899},
    {0.1927533154878019, 0.9621290551360144, 0.1927533154878019, 0.03758592063240899},
    {0.9621290551360144, 0.1927533154878019, 0.1927533154878019, 0.03758592063240899},
    {-0.9621290551360144, 0.1927533154878019, 0.1927533154878019, 0.03758592063240899},
    {0.9621290551360144, -0.1927533154878019, 0.1927533154878019, 0.03758592063240899},
    {0.9621290551360144, 0.1927533154878019, -0.1927533154878019, 0.03758592063240899},
    {-0.9621290551360144, -0.1927533154878019, 0.1927533154878019, 0.03758592063240899},
    {-0.9621290551360144, 0.1927533154878019, -0.1927533154878019, 0.03758592063240899},
    {0.9621290551360144, -0.1927533154878019, -0.1927533154878019, 0.03758592063240899},
    {-0.9621290551360144, -0.1927533154878019, -0.1927533154878019, 0.03758592063240899},
    {0.6930357961327123, 0.6930357961327123, 0.19850131122336542, 0.03747506154911825},
    {-0.6930357961327123, 0.6930357961327123, 0.19850131122336542, 0.03747506154911825},
    {0.6930357961327123, -0.6930357961327123, 0.19850131122336542, 0.03747506154911825},
    {0.6930357961327123, 0.6930357961327123, -0.19850131122336542, 0.03747506154911825},
    {-0.6930357961327123, -0.6930357961327123, 0.19850131122336542, 0.03747506154911825},
    {-0.6930357961327123, 0.6930357961327123, -0.19850131122336542, 0.03747506154911825},
    {0.6930357961327123, -0.6930357961327123, -0.19850131122336542, 0.03747506154911825},
    {-0.6930357961327123, -0.6930357961327123, -0.19850131122336542, 0.03747506154911825},
    {-0.6930357961327123, 0.19850131122336542, 0.6930357961327123, 0.03747506154911825},
    {0.6930357961327123, -0.19850131122336542, 0.6930357961327123, 0.03747506154911825},
    {0.6930357961327123, 0.19850131122336542, -0.6930357961327123, 0.03747506154911825},
    {-0.6930357961327123, -0.19850131122336542, 0.6930357961327123, 0.03747506154911825},
    {-0.6930357961327123, 0.19850131122336542, -0.6930357961327123, 0.03747506154911825},
    {0.6930357961327123, -0.19850131122336542, -0.6930357961327123, 0.03747506154911825},
    {-0.6930357961327123, -0.19850131122336542, -0.6930357961327123, 0.03747506154911825},
    {0.6930357961327123, 0.19850131122336542, 0.6930357961327123, 0.03747506154911825},
    {0.19850131122336542, 0.6930357961327123, 0.6930357961327123, 0.03747506154911825},
    {-0.19850131122336542, 0.6930357961327123, 0.6930357961327123, 0.03747506154911825},
    {0.19850131122336542, -0.6930357961327123, 0.6930357961327123, 0.03747506154911825},
    {0.19850131122336542, 0.6930357961327123, -0.6930357961327123, 0.03747506154911825},
    {-0.19850131122336542, -0.6930357961327123, 0.6930357961327123, 0.03747506154911825},
    {-0.19850131122336542, 0.6930357961327123, -0.6930357961327123, 0.03747506154911825},
    {0.19850131122336542, -0.6930357961327123, -0.6930357961327123, 0.03747506154911825},
    {-0.19850131122336542, -0.6930357961327123, -0.6930357961327123, 0.03747506154911825},
    {0.3608302115520091, 0.3608302115520091, 0.860001812127547, 0.03420018485683569},
    {-0.3608302115520091, 0.3608302115520091, 0.860001812127547, 0.03420018485683569},
    {0.3608302115520091, -0.3608302115520091, 0.860001812127547, 0.03420018485683569},
    {0.3608302115520091, 0.3608302115520091, -0.860001812127547, 0.03420018485683569},
    {-0.3608302115520091, -0.3608302115520091, 0.860001812127547, 0.03420018485683569},
    {-0.3608302115520091, 0.3608302115520091, -0.860001812127547, 0.03420018485683569},
    {0.3608302115520091, -0.3608302115520091, -0.860001812127547, 0.03420018485683569},
    {-0.3608302115520091, -0.3608302115520091, -0.860001812127547, 0.03420018485683569},
    {-0.3608302115520091, 0.860001812127547, 0.3608302115520091, 0.03420018485683569},
    {0.3608302115520091, -0.860001812127547, 0.3608302115520091, 0.03420018485683569},
    {0.3608302115520091, 0.860001812127547, -0.3608302115520091, 0.03420018485683569},
    {-0.3608302115520091, -0.860001812127547, 0.3608302115520091, 0.03420018485683569},
    {-0.3608302115520091, 0.860001812127547, -0.3608302115520091, 0.03420018485683569},
    {0.3608302115520091, -0.860001812127547, -0.3608302115520091, 0.03420018485683569},
    {-0.3608302115520091, -0.860001812127547, -0.3608302115520091, 0.03420018485683569},
    {0.3608302115520091, 0.860001812127547, 0.3608302115520091, 0.03420018485683569},
    {0.860001812127547, 0.3608302115520091, 0.3608302115520091, 0.03420018485683569},
    {-0.860001812127547, 0.3608302115520091, 0.3608302115520091, 0.03420018485683569},
    {0.860001812127547, -0.3608302115520091, 0.3608302115520091, 0.03420018485683569},
    {0.860001812127547, 0.3608302115520091, -0.3608302115520091, 0.03420018485683569},
    {-0.860001812127547, -0.3608302115520091, 0.3608302115520091, 0.03420018485683569},
    {-0.860001812127547, 0.3608302115520091, -0.3608302115520091, 0.03420018485683569},
    {0.860001812127547, -0.3608302115520091, -0.3608302115520091, 0.03420018485683569},
    {-0.860001812127547, -0.3608302115520091, -0.3608302115520091, 0.03420018485683569},
    {0.6498486161496169, 0.6498486161496169, 0.3941998886058389, 0.03812025862193428},
    {-0.6498486161496169, 0.6498486161496169, 0.3941998886058389, 0.03812025862193428},
    {0.6498486161496169, -0.6498486161496169, 0.3941998886058389, 0.03812025862193428},
    {0.6498486161496169, 0.6498486161496169, -0.3941998886058389, 0.03812025862193428},
    {-0.6498486161496169, -0.6498486161496169, 0.3941998886058389, 0.03812025862193428},
    {-0.6498486161496169, 0.6498486161496169, -0.3941998886058389, 0.03812025862193428},
    {0.6498486161496169, -0.6498486161496169, -0.3941998886058389, 0.03812025862193428},
    {-0.6498486161496169, -0.6498486161496169, -0.3941998886058389, 0.03812025862193428},
    {-0.6498486161496169, 0.3941998886058389, 0.6498486161496169, 0.03812025862193428},
    {0.6498486161496169, -0.3941998886058389, 0.6498486161496169, 0.03812025862193428},
    {0.6498486161496169, 0.3941998886058389, -0.6498486161496169, 0.03812025862193428},
    {-0.6498486161496169, -0.3941998886058389, 0.6498486161496169, 0.03812025862193428},
    {-0.6498486161496169, 0.3941998886058389, -0.6498486161496169, 0.03812025862193428},
    {0.6498486161496169, -0.3941998886058389, -0.6498486161496169, 0.03812025862193428},
    {-0.6498486161496169, -0.3941998886058389, -0.6498486161496169, 0.03812025862193428},
    {0.6498486161496169, 0.3941998886058389, 0.6498486161496169, 0.03812025862193428},
    {0.3941998886058389, 0.6498486161496169, 0.6498486161496169, 0.03812025862193428},
    {-0.3941998886058389, 0.6498486161496169, 0.6498486161496169, 0.03812025862193428},
    {0.3941998886058389, -0.6498486161496169, 0.6498486161496169, 0.03812025862193428},
    {0.3941998886058389, 0.6498486161496169, -0.6498486161496169, 0.03812025862193428},
    {-0.3941998886058389, -0.6498486161496169, 0.6498486161496169, 0.03812025862193428},
    {-0.3941998886058389, 0.6498486161496169, -0.6498486161496169, 0.03812025862193428},
    {0.3941998886058389, -0.6498486161496169, -0.6498486161496169, 0.03812025862193428},
    {-0.3941998886058389, -0.6498486161496169, -0.6498486161496169, 0.03812025862193428},
    {0.1932945013230339, 0.9811407828432572, 0.0, 0.03779900890017291},
    {-0.1932945013230339, 0.9811407828432572, 0.0, 0.03779900890017291},
    {0.1932945013230339, -0.9811407828432572, 0.0, 0.03779900890017291},
    {-0.1932945013230339, -0.9811407828432572, 0.0, 0.03779900890017291},
    {0.9811407828432572, 0.1932945013230339, 0.0, 0.03779900890017291},
    {-0.9811407828432572, 0.1932945013230339, 0.0, 0.03779900890017291},
    {0.9811407828432572, -0.1932945013230339, 0.0, 0.03779900890017291},
    {-0.9811407828432572, -0.1932945013230339, 0.0, 0.03779900890017291},
    {0.1932945013230339, 0.0, 0.9811407828432572, 0.03779900890017291},
    {-0.1932945013230339, 0.0, 0.9811407828432572, 0.03779900890017291},
    {0.1932945013230339, 0.0, -0.9811407828432572, 0.03779900890017291},
    {-0.1932945013230339, 0.0, -0.9811407828432572, 0.03779900890017291},
    {0.9811407828432572, 0.0, 0.1932945013230339, 0.03779900890017291},
    {-0.9811407828432572, 0.0, 0.1932945013230339, 0.03779900890017291},
    {0.9811407828432572, 0.0, -0.1932945013230339, 0.03779900890017291},
    {-0.9811407828432572, 0.0, -0.1932945013230339, 0.03779900890017291},
    {0.0, 0.1932945013230339, 0.9811407828432572, 0.03779900890017291},
    {0.0, -0.1932945013230339, 0.9811407828432572, 0.03779900890017291},
    {0.0, 0.1932945013230339, -0.9811407828432572, 0.03779900890017291},
    {0.0, -0.1932945013230339, -0.9811407828432572, 0.03779900890017291},
    {0.0, 0.9811407828432572, 0.1932945013230339, 0.03779900890017291},
    {0.0, -0.9811407828432572, 0.1932945013230339, 0.03779900890017291},
    {0.0, 0.9811407828432572, -0.1932945013230339, 0.03779900890017291},
    {0.0, -0.9811407828432572, -0.1932945013230339, 0.03779900890017291},
    {0.3800494919899303, 0.924966152698679, 0.0, 0.03621583529945751},
    {-0.3800494919899303, 0.924966152698679, 0.0, 0.03621583529945751},
    {0.3800494919899303, -0.924966152698679, 0.0, 0.03621583529945751},
    {-0.3800494919899303, -0.924966152698679, 0.0, 0.03621583529945751},
    {0.924966152698679, 0.3800494919899303, 0.0, 0.03621583529945751},
    {-0.924966152698679, 0.3800494919899303, 0.0, 0.03621583529945751},
    {0.924966152698679, -0.3800494919899303, 0.0, 0.03621583529945751},
    {-0.924966152698679, -0.3800494919899303, 0.0, 0.03621583529945751},
    {0.3800494919899303, 0.0, 0.924966152698679, 0.03621583529945751},
    {-0.3800494919899303, 0.0, 0.924966152698679, 0.03621583529945751},
    {0.3800494919899303, 0.0, -0.924966152698679, 0.03621583529945751},
    {-0.3800494919899303, 0.0, -0.924966152698679, 0.03621583529945751},
    {0.924966152698679, 0.0, 0.3800494919899303, 0.03621583529945751},
    {-0.924966152698679, 0.0, 0.3800494919899303, 0.03621583529945751},
    {0.924966152698679, 0.0, -0.3800494919899303, 0.03621583529945751},
    {-0.924966152698679, 0.0, -0.3800494919899303, 0.03621583529945751},
    {0.0, 0.3800494919899303, 0.924966152698679, 0.03621583529945751},
    {0.0, -0.3800494919899303, 0.924966152698679, 0.03621583529945751},
    {0.0, 0.3800494919899303, -0.924966152698679, 0.03621583529945751},
    {0.0, -0.3800494919899303, -0.924966152698679, 0.03621583529945751},
    {0.0, 0.924966152698679, 0.3800494919899303, 0.03621583529945751},
    {0.0, -0.924966152698679, 0.3800494919899303, 0.03621583529945751},
    {0.0, 0.924966152698679, -0.3800494919899303, 0.03621583529945751},
    {0.0, -0.924966152698679, -0.3800494919899303, 0.03621583529945751},
    {0.2899558825499574, 0.7934537856582315, 0.5351230477182762, 0.03717581834486352},
    {-0.2899558825499574, 0.7934537856582315, 0.5351230477182762, 0.03717581834486352},
    {0.2899558825499574, -0.7934537856582315, 0.5351230477182762, 0.03717581834486352},
    {0.2899558825499574, 0.7934537856582315, -0.5351230477182762, 0.03717581834486352},
    {-0.2899558825499574, -0.7934537856582315, 0.5351230477182762, 0.03717581834486352},
    {0.2899558825499574, -0.7934537856582315, -0.5351230477182762, 0.03717581834486352},
    {-0.2899558825499574, 0.7934537856582315, -0.5351230477182762, 0.03717581834486352},
    {-0.2899558825499574, -0.7934537856582315, -0.5351230477182762, 0.03717581834486352},
    {0.7934537856582315, 0.2899558825499574, 0.5351230477182762, 0.03717581834486352},
    {-0.7934537856582315, 0.2899558825499574, 0.5351230477182762, 0.03717581834486352},
    {0.7934537856582315, -0.2899558825499574, 0.5351230477182762, 0.03717581834486352},
    {0.7934537856582315, 0.2899558825499574, -0.5351230477182762, 0.03717581834486352},
    {-0.7934537856582315, -0.2899558825499574, 0.5351230477182762, 0.03717581834486352},
    {0.7934537856582315, -0.2899558825499574, -0.5351230477182762, 0.03717581834486352},
    {-0.7934537856582315, 0.2899558825499574, -0.5351230477182762, 0.03717581834486352},
    {-0.7934537856582315, -0.2899558825499574, -0.5351230477182762, 0.03717581834486352},
    {0.5351230477182762, 0.2899558825499574, 0.7934537856582315, 0.03717581834486352},
    {-0.5351230477182762, 0.2899558825499574, 0.7934537856582315, 0.03717581834486352},
    {0.5351230477182762, -0.2899558825499574, 0.7934537856582315, 0.03717581834486352},
    {0.5351230477182762, 0.2899558825499574, -0.7934537856582315, 0.03717581834486352},
    {-0.5351230477182762, -0.2899558825499574, 0.7934537856582315, 0.03717581834486352},
    {0.5351230477182762, -0.2899558825499574, -0.7934537856582315, 0.03717581834486352},
    {-0.5351230477182762, 0.2899558825499574, -0.7934537856582315, 0.03717581834486352},
    {-0.5351230477182762, -0.2899558825499574, -0.7934537856582315, 0.03717581834486352},
    {0.5351230477182762, 0.7934537856582315, 0.2899558825499574, 0.03717581834486352},
    {-0.5351230477182762, 0.7934537856582315, 0.2899558825499574, 0.03717581834486352},
    {0.5351230477182762, -0.7934537856582315, 0.2899558825499574, 0.03717581834486352},
    {0.5351230477182762, 0.7934537856582315, -0.2899558825499574, 0.03717581834486352},
    {-0.5351230477182762, -0.7934537856582315, 0.2899558825499574, 0.03717581834486352},
    {0.5351230477182762, -0.7934537856582315, -0.2899558825499574, 0.03717581834486352},
    {-0.5351230477182762, 0.7934537856582315, -0.2899558825499574, 0.03717581834486352},
    {-0.5351230477182762, -0.7934537856582315, -0.2899558825499574, 0.03717581834486352},
    {0.2899558825499574, 0.5351230477182762, 0.7934537856582315, 0.03717581834486352},
    {-0.2899558825499574, 0.5351230477182762, 0.7934537856582315, 0.03717581834486352},
    {0.2899558825499574, -0.5351230477182762, 0.7934537856582315, 0.03717581834486352},
    {0.2899558825499574, 0.5351230477182762, -0.7934537856582315, 0.03717581834486352},
    {-0.2899558825499574, -0.5351230477182762, 0.7934537856582315, 0.03717581834486352},
    {0.2899558825499574, -0.5351230477182762, -0.7934537856582315, 0.03717581834486352},
    {-0.2899558825499574, 0.5351230477182762, -0.7934537856582315, 0.03717581834486352},
    {-0.2899558825499574, -0.5351230477182762, -0.7934537856582315, 0.03717581834486352},
    {0.7934537856582315, 0.5351230477182762, 0.2899558825499574, 0.03717581834486352},
    {-0.7934537856582315, 0.5351230477182762, 0.2899558825499574, 0.03717581834486352},
    {0.7934537856582315, -0.5351230477182762, 0.2899558825499574, 0.03717581834486352},
    {0.7934537856582315, 0.5351230477182762, -0.2899558825499574, 0.03717581834486352},
    {-0.7934537856582315, -0.5351230477182762, 0.2899558825499574, 0.03717581834486352},
    {0.7934537856582315, -0.5351230477182762, -0.2899558825499574, 0.03717581834486352},
    {-0.7934537856582315, 0.5351230477182762, -0.2899558825499574, 0.03717581834486352},
    {-0.7934537856582315, -0.5351230477182762, -0.2899558825499574, 0.03717581834486352},
    {0.09684121455103957, 0.8280801506686862, 0.5521820743493993, 0.03815175284444799},
    {-0.09684121455103957, 0.8280801506686862, 0.5521820743493993, 0.03815175284444799},
    {0.09684121455103957, -0.8280801506686862, 0.5521820743493993, 0.03815175284444799},
    {0.09684121455103957, 0.8280801506686862, -0.5521820743493993, 0.03815175284444799},
    {-0.09684121455103957, -0.8280801506686862, 0.5521820743493993, 0.03815175284444799},
    {0.09684121455103957, -0.8280801506686862, -0.5521820743493993, 0.03815175284444799},
    {-0.09684121455103957, 0.8280801506686862, -0.5521820743493993, 0.03815175284444799},
    {-0.09684121455103957, -0.8280801506686862, -0.5521820743493993, 0.03815175284444799},
    {0.8280801506686862, 0.09684121455103957, 0.5521820743493993, 0.03815175284444799},
    {-0.8280801506686862, 0.09684121455103957, 0.5521820743493993, 0.03815175284444799},
    {0.8280801506686862, -0.09684121455103957, 0.5521820743493993, 0.03815175284444799},
    {0.8280801506686862, 0.09684121455103957, -0.5521820743493993, 0.03815175284444799},
    {-0.8280801506686862, -0.09684121455103957, 0.5521820743493993, 0.03815175284444799},
    {0.8280801506686862, -0.09684121455103957, -0.5521820743493993, 0.03815175284444799},
    {-0.8280801506686862, 0.09684121455103957, -0.5521820743493993, 0.03815175284444799},
    {-0.8280801506686862, -0.09684121455103957, -0.5521820743493993, 0.03815175284444799},
    {0.5521820743493993, 0.09684121455103957, 0.8280801506686862, 0.03815175284444799},
    {-0.5521820743493993, 0.09684121455103957, 0.8280801506686862, 0.03815175284444799},
    {0.5521820743493993, -0.09684121455103957, 0.8280801506686862, 0.03815175284444799},
    {0.5521820743493993, 0.09684121455103957, -0.8280801506686862, 0.03815175284444799},
    {-0.5521820743493993, -0.09684121455103957, 0.8280801506686862, 0.03815175284444799},
    {0.5521820743493993, -0.09684121455103957, -0.8280801506686862, 0.03815175284444799},
    {-0.5521820743493993, 0.09684121455103957, -0.8280801506686862, 0.03815175284444799},
    {-0.5521820743493993, -0.09684121455103957, -0.8280801506686862, 0.03815175284444799},
    {0.5521820743493993, 0.8280801506686862, 0.09684121455103957, 0.03815175284444799},
    {-0.5521820743493993, 0.8280801506686862, 0.09684121455103957, 0.03815175284444799},
    {0.5521820743493993, -0.8280801506686862, 0.09684121455103957, 0.03815175284444799},
    {0.5521820743493993, 0.8280801506686862, -0.09684121455103957, 0.03815175284444799},
    {-0.5521820743493993, -0.8280801506686862, 0.09684121455103957, 0.03815175284444799},
    {0.5521820743493993, -0.8280801506686862, -0.09684121455103957, 0.03815175284444799},
    {-0.5521820743493993, 0.8280801506686862, -0.09684121455103957, 0.03815175284444799},
    {-0.5521820743493993, -0.8280801506686862, -0.09684121455103957, 0.03815175284444799},
    {0.09684121455103957, 0.5521820743493993, 0.8280801506686862, 0.03815175284444799},
    {-0.09684121455103957, 0.5521820743493993, 0.8280801506686862, 0.03815175284444799},
    {0.09684121455103957, -0.5521820743493993, 0.8280801506686862, 0.03815175284444799},
    {0.09684121455103957, 0.5521820743493993, -0.8280801506686862, 0.03815175284444799},
    {-0.09684121455103957, -0.5521820743493993, 0.8280801506686862, 0.03815175284444799},
    {0.09684121455103957, -0.5521820743493993, -0.8280801506686862, 0.03815175284444799},
    {-0.09684121455103957, 0.5521820743493993, -0.8280801506686862, 0.03815175284444799},
    {-0.09684121455103957, -0.5521820743493993, -0.8280801506686862, 0.03815175284444799},
    {0.8280801506686862, 0.5521820743493993, 0.09684121455103957, 0.03815175284444799},
    {-0.8280801506686862, 0.5521820743493993, 0.09684121455103957, 0.03815175284444799},
    {0.8280801506686862, -0.5521820743493993, 0.09684121455103957, 0.03815175284444799},
    {0.8280801506686862, 0.5521820743493993, -0.09684121455103957, 0.03815175284444799},
    {-0.8280801506686862, -0.5521820743493993, 0.09684121455103957, 0.03815175284444799},
    {0.8280801506686862, -0.5521820743493993, -0.09684121455103957, 0.03815175284444799},
    {-0.8280801506686862, 0.5521820743493993, -0.09684121455103957, 0.03815175284444799},
    {-0.8280801506686862, -0.5521820743493993, -0.09684121455103957, 0.03815175284444799},
    {0.1833434647041659, 0.9074658265305127, 0.37800918987448673, 0.03559031656705768},
    {-0.1833434647041659, 0.9074658265305127, 0.37800918987448673, 0.03559031656705768},
    {0.1833434647041659, -0.9074658265305127, 0.37800918987448673, 0.03559031656705768},
    {0.1833434647041659, 0.9074658265305127, -0.37800918987448673, 0.03559031656705768},
    {-0.1833434647041659, -0.9074658265305127, 0.37800918987448673, 0.03559031656705768},
    {0.1833434647041659, -0.9074658265305127, -0.37800918987448673, 0.03559031656705768},
    {-0.1833434647041659, 0.9074658265305127, -0.37800918987448673, 0.03559031656705768},
    {-0.1833434647041659, -0.9074658265305127, -0.37800918987448673, 0.03559031656705768},
    {0.9074658265305127, 0.1833434647041659, 0.37800918987448673, 0.03559031656705768},
    {-0.9074658265305127, 0.1833434647041659, 0.37800918987448673, 0.03559031656705768},
    {0.9074658265305127, -0.1833434647041659, 0.37800918987448673, 0.03559031656705768},
    {0.9074658265305127, 0.1833434647041659, -0.37800918987448673, 0.03559031656705768},
    {-0.9074658265305127, -0.1833434647041659, 0.37800918987448673, 0.03559031656705768},
    {0.9074658265305127, -0.1833434647041659, -0.37800918987448673, 0.03559031656705768},
    {-0.9074658265305127, 0.1833434647041659, -0.37800918987448673, 0.03559031656705768},
    {-0.9074658265305127, -0.1833434647041659, -0.37800918987448673, 0.03559031656705768},
    {0.37800918987448673, 0.1833434647041659, 0.9074658265305127, 0.03559031656705768},
    {-0.37800918987448673, 0.1833434647041659, 0.9074658265305127, 0.03559031656705768},
    {0.37800918987448673, -0.1833434647041659, 0.9074658265305127, 0.03559031656705768},
    {0.37800918987448673, 0.1833434647041659, -0.9074658265305127, 0.03559031656705768},
    {-0.37800918987448673, -0.1833434647041659, 0.9074658265305127, 0.03559031656705768},
    {0.37800918987448673, -0.1833434647041659, -0.9074658265305127, 0.03559031656705768},
    {-0.37800918987448673, 0.1833434647041659, -0.9074658265305127, 0.03559031656705768},
    {-0.37800918987448673, -0.1833434647041659, -0.9074658265305127, 0.03559031656705768},
    {0.37800918987448673, 0.9074658265305127, 0.1833434647041659, 0.03559031656705768},
    {-0.37800918987448673, 0.9074658265305127, 0.1833434647041659, 0.03559031656705768},
    {0.37800918987448673, -0.9074658265305127, 0.1833434647041659, 0.03559031656705768},
    {0.37800918987448673, 0.9074658265305127, -0.1833434647041659, 0.03559031656705768},
    {-0.37800918987448673, -0.9074658265305127, 0.1833434647041659, 0.03559031656705768},
    {0.37800918987448673, -0.9074658265305127, -0.1833434647041659, 0.03559031656705768},
    {-0.37800918987448673, 0.9074658265305127, -0.1833434647041659, 0.03559031656705768},
    {-0.37800918987448673, -0.9074658265305127, -0.1833434647041659, 0.03559031656705768},
    {0.1833434647041659, 0.37800918987448673, 0.9074658265305127, 0.03559031656705768},
    {-0.1833434647041659, 0.37800918987448673, 0.9074658265305127, 0.03559031656705768},
    {0.1833434647041659, -0.37800918987448673, 0.9074658265305127, 0.03559031656705768},
    {0.1833434647041659, 0.37800918987448673, -0.9074658265305127, 0.03559031656705768},
    {-0.1833434647041659, -0.37800918987448673, 0.9074658265305127, 0.03559031656705768},
    {0.1833434647041659, -0.37800918987448673, -0.9074658265305127, 0.03559031656705768},
    {-0.1833434647041659, 0.37800918987448673, -0.9074658265305127, 0.03559031656705768},
    {-0.1833434647041659, -0.37800918987448673, -0.9074658265305127, 0.03559031656705768},
    {0.9074658265305127, 0.37800918987448673, 0.1833434647041659, 0.03559031656705768},
    {-0.9074658265305127, 0.37800918987448673, 0.1833434647041659, 0.03559031656705768},
    {0.9074658265305127, -0.37800918987448673, 0.1833434647041659, 0.03559031656705768},
    {0.9074658265305127, 0.37800918987448673, -0.1833434647041659, 0.03559031656705768},
    {-0.9074658265305127, -0.37800918987448673, 0.1833434647041659, 0.03559031656705768},
    {0.9074658265305127, -0.37800918987448673, -0.1833434647041659, 0.03559031656705768},
    {-0.9074658265305127, 0.37800918987448673, -0.1833434647041659, 0.03559031656705768},
    {-0.9074658265305127, -0.37800918987448673, -0.1833434647041659, 0.03559031656705768},
};

const LebedevTable kLebedevTables[] = {
    {3, 6, &kLeb3[0][0]},
    {5, 14, &kLeb5[0][0]},
    {7, 26, &kLeb7[0][0]},
    {9, 38, &kLeb9[0][0]},
    {11, 50, &kLeb11[0][0]},
    {13, 74, &kLeb13[0][0]},
    {15, 86, &kLeb15[0][0]},
    {17, 110, &kLeb17[0][0]},
    {19, 146, &kLeb19[0][0]},
    {21, 170, &kLeb21[0][0]},
    {23, 194, &kLeb23[0][0]},
    {25, 230, &kLeb25[0][0]},
    {27, 266, &kLeb27[0][0]},
    {29, 302, &kLeb29[0][0]},
    {31, 350, &kLeb31[0][0]},
};

const int kLebedevTableCount = 15;

} // namespace flq::detail
