"""Frozen expected values for the reference machine dataset.

Every number here was produced by an independent first-principles
evaluation (plain trigonometry, a linear two-constraint solve for the
center, closed-form tangency and intercept arithmetic, and a fitted
complex-impedance sweep), run separately from the package under test.
Tests compare library output against these constants; they never
recompute expectations through the code paths being tested.
"""

# Inputs: three-phase machine, line quantities.
I0_A = 6.0
PHI0_DEG = 85.0
ISC_A = 12.0
PHI_SC_DEG = 69.0667
V_RATED = 400.0
V_SC = 100.0
P_RATED_W = 5600.0

# Anchors after referral to rated voltage.
ISC_REFERRED_A = 48.0
O_PRIME = (5.977168188550474, 0.5229344564859488)
A_POINT = (44.831855152230226, 17.149482896269745)
MIDPOINT_OA = (25.40451167039035, 8.836208676377847)
OA_VECTOR = (38.854686963679754, 16.626548439783797)

# Constructed diagram.
CENTER = (28.961896050798394, 0.5229344564859488)
RADIUS = 22.984727862247922
SPLIT_D = (44.831855152230226, 8.836208676377847)
POWER_SCALE_W_PER_A = 692.8203230275509
M_OUT = 0.42791615990435894
M_TQ = 0.21395807995217947
SLIP_LINE_SLOPE_AT_0_0498 = 4.510305066943736
OUTPUT_INTERCEPT_AT_X_8_129 = 1.4437380620014704

# Fixed quantities read at the anchor points.
FIXED_LOSS_W = 362.2996190648318
INPUT_AT_A_W = 11881.510279949065
COPPER_AT_A_W = 11519.210660884233

# Rated operating point (output power 5600 W, stable branch).
RATED_POINT = (7.74482034800155, 9.36224514925967)
RATED_SLIP = 0.0446990508153092
RATED_EFFICIENCY = 0.8633510060665238
RATED_CURRENT_A = 12.15046815796227
RATED_PF = 0.7705254668005971
RATED_INPUT_W = 6486.353708573206
RATED_AIRGAP_W = 5862.02704475419
RATED_ROTOR_CU_W = 262.0270447541843

# Extremal points (tangency / topmost / origin-ray tangency).
MAX_OUTPUT_W = 10506.740308098322
MAX_OUTPUT_POINT = (19.919467622268236, 21.654243053364315)
MAX_OUTPUT_SLIP = 0.16437227278703861
MAX_OUTPUT_EFFICIENCY = 0.7003326473057668
MAX_OUTPUT_CURRENT_A = 29.422634697945888
MAX_OUTPUT_PF = 0.7359722633838799
MAX_TORQUE_W = 12877.569678255206
MAX_TORQUE_POINT = (24.152967828509333, 22.99896444966908)
MAX_INPUT_W = 16286.586201287786
MAX_INPUT_POINT = (28.961896050798394, 23.50766231873387)
MAX_PF = 0.8043476844410952
MAX_PF_POINT = (10.474183417290554, 14.179515158932322)

# Constant-slip-line intersections with the circle (beyond no load).
SLIP_POINT_0_0498 = (8.131025421967443, 10.237487649839924)
SLIP_POINT_NEG_0_05 = (8.600115318066573, -10.139879444813607)
SLIP_POINT_1_5 = (46.760556185830886, 15.066160106224082)

# Fitted equivalent circuit (star connection, per-phase values).
R_TOTAL_OHM = 2.1497536241632944
X_OHM = 5.023772938707838
R1_OHM = 1.0748768120816472
R2_OHM = 1.0748768120816472
Y0_MAG_S = 0.02598076211353316
Y0_ANG_DEG = -85.0
