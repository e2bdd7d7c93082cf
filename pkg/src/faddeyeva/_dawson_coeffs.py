"""Piecewise polynomials for Dawson's integral.

Generated by scripts/fit_dawson.py; do not edit by hand.
"""

MID_LO = 0.5
MID_HI = 7.0
MID_SCALE = 4.0  # intervals per unit
# one tuple per interval, coefficients of t^k from the highest k down
MID = (
    (
        2.9037821628021626e-13,
        -1.5956071428865653e-12,
        -9.503321544683354e-11,
        9.86119676360021e-10,
        2.2439783408226925e-08,
        -3.646458775969352e-07,
        -3.203282475842702e-06,
        8.602842100360714e-05,
        8.238309119596666e-05,
        -0.011423553344461202,
        0.049208989967487286,
        0.4850624642080814,
    ),
    (
        -1.1433463377811231e-14,
        1.2580014174751714e-13,
        3.543958712994299e-12,
        -6.921522397459531e-11,
        -6.495990463114046e-10,
        2.448130656090633e-08,
        -5.071769061780365e-09,
        -5.448310346290317e-06,
        3.911195207843344e-05,
        0.0005979459908699345,
        -0.009191951802128423,
        0.006940847491384301,
        0.539698982896529,
    ),
    (
        -6.214763148070126e-15,
        -1.1329151736384277e-13,
        3.425652695601654e-12,
        9.51313233857595e-12,
        -1.1818507061405941e-09,
        7.896398240961633e-09,
        2.314862103163456e-07,
        -3.852168876671014e-06,
        -9.775832494559297e-06,
        0.0007043295126721098,
        -0.005087659054744933,
        -0.021826701723814672,
        0.5220504950180077,
    ),
    (
        3.399785320608729e-15,
        -1.379414606541007e-13,
        2.0230270975189013e-13,
        4.660657495397686e-11,
        -5.773991637563916e-10,
        -7.071585598900108e-09,
        2.2560162262795364e-07,
        -8.975825427636741e-07,
        -3.344210357307397e-05,
        0.0005114763461185008,
        -0.001345650549950136,
        -0.03429957317792252,
        0.4634169401539564,
    ),
    (
        4.849404210010195e-15,
        -2.072914507248438e-14,
        -1.6075718058314416e-12,
        2.8078725128788954e-11,
        1.4941704917502628e-10,
        -1.0028975456433453e-08,
        9.212590650685465e-08,
        1.048853662104895e-06,
        -3.1323271654003056e-05,
        0.00023938594557683,
        0.0008973614792132907,
        -0.03464675000514933,
        0.3929766153972907,
    ),
    (
        5.0296242982570224e-14,
        -1.0875617062980844e-12,
        -1.5259285721348107e-12,
        3.717415238769388e-10,
        -5.136521256766655e-09,
        -1.8118760884886285e-08,
        1.422362114441761e-06,
        -1.7856629335178907e-05,
        4.0271501728983895e-05,
        0.0016815760289225813,
        -0.029089704599822012,
        0.328724703146287,
    ),
    (
        -1.4977276551972866e-15,
        3.5907768857421286e-14,
        -3.091773734686092e-14,
        -1.2142662266123548e-11,
        2.163140517096112e-10,
        -1.8022276239826756e-10,
        -5.231260770775656e-08,
        9.296842160954334e-07,
        -5.760610994377285e-06,
        -5.081908766799821e-05,
        0.0016012826976363294,
        -0.022343173443689985,
        0.2773518558940047,
    ),
    (
        -1.0353131168583672e-15,
        2.0162121106477223e-15,
        3.625597920854942e-13,
        -7.54978953270361e-12,
        2.74228046502622e-11,
        1.6532564371466982e-09,
        -3.843210790133888e-08,
        3.5988063138106316e-07,
        5.412327201308561e-07,
        -6.786432270828529e-05,
        0.001220144343280755,
        -0.016667767542338598,
        0.238598345334465,
    ),
    (
        -1.0016251115674913e-14,
        2.2721923919812832e-13,
        -1.2185661676378104e-12,
        -4.716246466206343e-11,
        1.3413311547392247e-09,
        -1.6094325315163234e-08,
        3.752266570552259e-08,
        2.3021344659235708e-06,
        -5.434845029989315e-05,
        0.0008466442446618476,
        -0.012562077909108864,
        0.20961840443292779,
    ),
    (
        -6.015196095079724e-15,
        3.7831728642532224e-14,
        1.265266201356213e-12,
        -4.095596498265204e-11,
        5.775702242942292e-10,
        -2.799614320937403e-09,
        -6.498459033139773e-08,
        2.0321716152166607e-06,
        -3.634241269942747e-05,
        0.0005757575253253515,
        -0.009753551463337834,
        0.1874832020359483,
    ),
    (
        -8.708955864777788e-16,
        -3.228724685517923e-14,
        1.1170102131452641e-12,
        -1.7458178451381803e-11,
        1.1475109313183072e-10,
        1.6003947034912102e-09,
        -6.571410976780307e-08,
        1.3355770084384863e-06,
        -2.2875167648832412e-05,
        0.0004009253341332903,
        -0.007827117259044277,
        0.17001871009157668,
    ),
    (
        8.057780010075337e-16,
        -2.74485791529561e-14,
        4.55361432019218e-13,
        -3.4969809794104714e-12,
        -3.672356369350457e-11,
        1.886750540317475e-09,
        -4.271618720461412e-08,
        7.910809557658394e-07,
        -1.4524595852773513e-05,
        0.0002909057256860788,
        -0.0064600933916578816,
        0.15580455513085378,
    ),
    (
        6.11676935140488e-16,
        -1.0426470593119725e-14,
        8.523717112626283e-14,
        8.463110355246639e-13,
        -4.9089294285699345e-11,
        1.2069503639327446e-09,
        -2.4005559678524754e-08,
        4.644267544024281e-07,
        -9.627486328863685e-06,
        0.00021975047897453617,
        -0.005448525202690656,
        0.14394320022365867,
    ),
    (
        -1.7300568672774203e-15,
        -1.9762895960987738e-14,
        1.1722061817642736e-12,
        -3.0481526600718016e-11,
        6.448354233280997e-10,
        -1.3162164628039145e-08,
        2.842187058211689e-07,
        -6.704833499820068e-06,
        0.00017146984414857187,
        -0.004671901152627304,
        0.13385486570593785,
    ),
    (
        4.833281561057642e-16,
        -2.5734226293127706e-14,
        6.935845293214601e-13,
        -1.5454815669655067e-11,
        3.3245190829668995e-10,
        -7.509051389513968e-09,
        1.839679293378488e-07,
        -4.86949344047431e-06,
        0.0001371453885804023,
        -0.004058326452868316,
        0.12514746807550867,
    ),
    (
        5.223324231358021e-16,
        -1.432023615390161e-14,
        3.326574936452131e-13,
        -7.527698116123745e-12,
        1.7831048806966867e-10,
        -4.554655770747231e-09,
        1.251773376803689e-07,
        -3.652461897660404e-06,
        0.00011181346719512914,
        -0.0035628350096538887,
        0.11754316343739785,
    ),
    (
        2.679966448885479e-16,
        -6.491957807276536e-15,
        1.536836187418233e-13,
        -3.82431446812022e-12,
        1.0215741171929407e-10,
        -2.923171799835149e-09,
        8.854313319130241e-08,
        -2.8083884419775903e-06,
        9.257685130474887e-05,
        -0.0031557382078456586,
        0.11083739520678544,
    ),
    (
        1.1447630481231642e-16,
        -2.857256865357872e-15,
        7.44699434235419e-14,
        -2.0850545692000362e-12,
        6.22531691861074e-11,
        -1.960818561450158e-09,
        6.451931525429512e-08,
        -2.2025223259647545e-06,
        7.76398983601052e-05,
        -0.002816513892751392,
        0.10487508832225756,
    ),
    (
        -1.3287090961574854e-15,
        3.9029501684753543e-14,
        -1.2140576675234124e-12,
        3.981571009310119e-11,
        -1.3604983861840085e-09,
        4.8135797216211506e-08,
        -1.7558879428853867e-06,
        6.583002361945502e-05,
        -0.002530465725880814,
        0.09953597324946795,
    ),
    (
        -6.690911621423677e-16,
        2.1827993726385815e-14,
        -7.44167097353064e-13,
        2.6425105999193326e-11,
        -9.695877066831324e-10,
        3.6618641920907164e-08,
        -1.4194675689454324e-06,
        5.6349919300947987e-05,
        -0.0022867776433220773,
        0.09472504382758852,
    ),
    (
        -3.615480975889132e-16,
        1.2877894825020585e-14,
        -4.744468392309205e-13,
        1.806015089105773e-11,
        -7.064315392310395e-10,
        2.832186584162353e-08,
        -1.1614549162867217e-06,
        4.8640272406235e-05,
        -0.00207731258631709,
        0.09036608895026993,
    ),
    (
        -2.0627074596360938e-16,
        7.915781028386915e-15,
        -3.1210638045073744e-13,
        1.2646118173074915e-11,
        -5.244562000641294e-10,
        2.2221384378399016e-08,
        -9.604920736005227e-07,
        4.229879025934563e-05,
        -0.0018958359031236165,
        0.08639716487021182,
    ),
    (
        -1.2271709928736397e-16,
        5.028003817371143e-15,
        -2.1071587902369302e-13,
        9.03987955522836e-12,
        -3.95754021982235e-10,
        1.7656288909248905e-08,
        -8.018375129336122e-07,
        3.703003315367111e-05,
        -0.0017374952232882708,
        0.0827673438192903,
    ),
    (
        -7.551653076256715e-17,
        3.2822761139658452e-15,
        -1.4545475943204686e-13,
        6.579068290808217e-12,
        -3.029507885086906e-10,
        1.4187308355041105e-08,
        -6.75080599883174e-07,
        3.2613135124774516e-05,
        -0.0015984621537747236,
        0.07943432919452531,
    ),
    (
        -4.7805956616974255e-17,
        2.1935024400403086e-15,
        -1.0236587818278438e-13,
        4.864535411944125e-12,
        -2.3489052840692374e-10,
        1.1515206759844203e-08,
        -5.727234736872984e-07,
        2.8880397640273113e-05,
        -0.0014756796214604993,
        0.07636267448842898,
    ),
    (
        1.4962355384984408e-15,
        -7.335273024716891e-14,
        3.647945030992483e-12,
        -1.8422161246007102e-10,
        9.431785842707998e-09,
        -4.892727549714454e-07,
        2.5702732934828825e-05,
        -0.0013666801269397242,
        0.07352243207385584,
    ),
)

TAIL_LO = 7.0
TAIL_HI = 20.0
TAIL_SCALE = 2.0  # intervals per unit
# one tuple per interval, coefficients of t^k from the highest k down
TAIL = (
    (
        -2.630450701013348e-17,
        5.95724392785965e-16,
        -1.3522130471177151e-14,
        3.102896454857555e-13,
        -7.133249422785346e-12,
        1.6362976146991336e-10,
        -3.7249723394329142e-09,
        8.347497449326417e-08,
        -1.8174202933918287e-06,
        3.752549199342234e-05,
        -0.0006964141205118952,
        0.009797800811475101,
    ),
    (
        2.3565361409376284e-16,
        -5.8799312319075065e-15,
        1.4643845131017262e-13,
        -3.660552431383855e-12,
        9.109256616743516e-11,
        -2.244751841792779e-09,
        5.4345719665110264e-08,
        -1.2759417891241011e-06,
        2.836134932521629e-05,
        -0.0005657194840951183,
        0.008541761208872602,
    ),
    (
        1.0071965239084861e-16,
        -2.72188055822638e-15,
        7.331308934822667e-14,
        -1.976976478414866e-12,
        5.297993304325568e-11,
        -1.403679883138854e-09,
        3.6481999350773984e-08,
        -9.182070267443824e-07,
        2.1850055927523378e-05,
        -0.00046600991797759127,
        0.007514363199210068,
    ),
    (
        4.588318934977156e-17,
        -1.3331426518504473e-15,
        3.856534091493882e-14,
        -1.11476846495024e-12,
        3.198024788251919e-11,
        -9.058983408425769e-10,
        2.5142824974324267e-08,
        -6.750103524351951e-07,
        1.711559395204846e-05,
        -0.0003885636932421622,
        0.00666293988012145,
    ),
    (
        2.205814955987189e-17,
        -6.850059223003477e-16,
        2.1162459446521965e-14,
        -6.522947238555346e-13,
        1.99330028190041e-11,
        -6.008507057730713e-10,
        1.7728909957183094e-08,
        -5.055485121753184e-07,
        1.3603477373896697e-05,
        -0.0003274636656946443,
        0.005949249996359747,
    ),
    (
        1.1106154128127168e-17,
        -3.668316339850019e-16,
        1.2045941437010446e-14,
        -3.941746791202715e-13,
        1.2776667784388333e-11,
        -4.0818532258563466e-10,
        1.2754956260243845e-08,
        -3.8489270500984286e-07,
        1.095199267129406e-05,
        -0.00027859352617348694,
        0.0053449578190126424,
    ),
    (
        5.821636236423251e-18,
        -2.0367107855984305e-16,
        7.08048440613141e-15,
        -2.4503867764976225e-13,
        8.394270914392832e-12,
        -2.8323678504840433e-10,
        9.34148597941986e-09,
        -2.9733716300983836e-07,
        8.918922099047503e-06,
        -0.00023902647609914043,
        0.004828691383239999,
    ),
    (
        -1.167473406618491e-16,
        4.289794644062314e-15,
        -1.5620660229378202e-13,
        5.637489034953171e-12,
        -2.0028406541573358e-10,
        6.9513458382981645e-09,
        -2.3271720666248078e-07,
        7.338297614805392e-06,
        -0.0002066410563178301,
        0.004384076329914902,
    ),
    (
        -6.885042743230623e-17,
        2.660469309621855e-15,
        -1.0184315504879393e-13,
        3.861336871244291e-12,
        -1.4404895138116592e-10,
        5.24738204629814e-09,
        -1.8429618717445103e-07,
        6.09405914805994e-06,
        -0.00017987303544701202,
        0.003998390824373289,
    ),
    (
        -4.1652657583260156e-17,
        1.6881267562045997e-15,
        -6.775810859546445e-14,
        2.6921606297011195e-12,
        -1.0520331145923798e-10,
        4.012776517230495e-09,
        -1.4751389105212287e-07,
        5.103558023193039e-06,
        -0.0001575512624698843,
        0.0036616262038567365,
    ),
    (
        -2.5785983430578314e-17,
        1.09352762171099e-15,
        -4.5915592022101396e-14,
        1.907478334875547e-12,
        -7.791019529656925e-11,
        3.1050337881451957e-09,
        -1.1922419822784097e-07,
        4.30696847396905e-06,
        -0.00013878671631134537,
        0.0033658188018362086,
    ),
    (
        -1.6300948094300026e-17,
        7.218048248054909e-16,
        -3.1638551576282184e-14,
        1.3715006619162447e-12,
        -5.843555520689017e-11,
        2.428651037696888e-09,
        -9.721902456007089e-08,
        3.660340064524873e-06,
        -0.00012289605780088574,
        0.0031045667534063868,
    ),
    (
        -1.050361475259583e-17,
        4.846987872794243e-16,
        -2.2136696904510983e-14,
        9.994779382521407e-13,
        -4.4342315281215796e-11,
        1.918473120870161e-09,
        -7.99243062285948e-08,
        3.1309478176900164e-06,
        -0.00010934803399205716,
        0.0028726753182479942,
    ),
    (
        -6.887676528012166e-18,
        3.306534320302327e-16,
        -1.5707573741633496e-14,
        7.374304026841936e-13,
        -3.401062688949777e-11,
        1.5293231704836977e-09,
        -6.620187943603513e-08,
        2.6941237706475226e-06,
        -9.772530818609977e-05,
        0.0026658929849525635,
    ),
    (
        -4.589983840184284e-18,
        2.288678301616677e-16,
        -1.1290955753270852e-14,
        5.50332654254558e-13,
        -2.6345724758257315e-11,
        1.2294086118218773e-09,
        -5.52179695036279e-08,
        2.3310623895980885e-06,
        -8.769688329266965e-05,
        0.0024807126747243002,
    ),
    (
        -3.1047147267927212e-18,
        1.605578612423012e-16,
        -8.214054552749184e-15,
        4.1506769490682905e-13,
        -2.059629810775381e-11,
        9.960486106020966e-10,
        -4.6354412878817586e-08,
        2.02727760323435e-06,
        -7.899791512115692e-05,
        0.002314220275248254,
    ),
    (
        -2.1292772925842835e-18,
        1.1404891698903877e-16,
        -6.042492866236569e-15,
        3.161368578695328e-13,
        -1.623940618378121e-11,
        8.128576698964192e-10,
        -3.9147793291588397e-08,
        1.7715029590133977e-06,
        -7.141475564054625e-05,
        0.0021639780233645533,
    ),
    (
        -1.4791825272583828e-18,
        8.195709192927914e-17,
        -4.491304467282714e-15,
        2.429972817600385e-13,
        -1.2906273666984381e-11,
        6.678594739201506e-10,
        -3.3247116727207376e-08,
        1.5548976379869636e-06,
        -6.477374692781726e-05,
        0.002027933847122348,
    ),
    (
        -1.0399519473502913e-18,
        5.953600018863536e-17,
        -3.3707526904140984e-15,
        1.8838007422193045e-13,
        -1.0333667304081219e-11,
        5.522051077529649e-10,
        -2.8383988248703492e-08,
        1.3704665045385633e-06,
        -5.8932738051358565e-05,
        0.0019043502546328447,
    ),
    (
        4.368839729270713e-17,
        -2.5544186537975745e-15,
        1.4721045773861392e-13,
        -8.33155432900046e-12,
        4.592901002997535e-10,
        -2.4351339597447112e-08,
        1.2126318523473413e-06,
        -5.377460130462766e-05,
        0.0017917480888862487,
    ),
    (
        3.236463870555005e-17,
        -1.9509267713933758e-15,
        1.1590383506268444e-13,
        -6.761297050475191e-12,
        3.8413847778577195e-10,
        -2.0988082439354764e-08,
        1.076913942757027e-06,
        -4.920223204779758e-05,
        0.0016888616941069608,
    ),
    (
        2.4190452746443977e-17,
        -1.5019407644947657e-15,
        9.190038143241749e-14,
        -5.520743261008158e-12,
        3.22967998968877e-10,
        -1.816791853617978e-08,
        9.596904300668139e-07,
        -4.5134660326586554e-05,
        0.0015946029181532885,
    ),
    (
        1.8233020865560838e-17,
        -1.1649982476442903e-15,
        7.335325332639962e-14,
        -4.533928529581633e-12,
        2.728798840139317e-10,
        -1.579109949816094e-08,
        8.580135803008142e-07,
        -4.150400331600451e-05,
        0.0015080320123917585,
    ),
    (
        1.3851833066771251e-17,
        -9.100673830357347e-16,
        5.891711399560076e-14,
        -3.743868124760889e-12,
        2.3163509495904865e-10,
        -1.377830190624291e-08,
        7.694702399417065e-07,
        -3.825305916658701e-05,
        0.0014283339568274794,
    ),
    (
        1.0602296712105693e-17,
        -7.156955562168283e-16,
        4.760302746937824e-14,
        -3.1074632625813606e-12,
        1.9749145487269954e-10,
        -1.2066034787332683e-08,
        6.92073714047355e-07,
        -3.533339409783474e-05,
        0.0013547990830542588,
    ),
    (
        8.172640662682426e-18,
        -5.664141112620992e-16,
        3.867780104062256e-14,
        -2.591864432696818e-12,
        1.690839759219121e-10,
        -1.0603167610095115e-08,
        6.241796654728019e-07,
        -3.270381169980692e-05,
        0.001286807124818591,
    ),
)
