// (order, x, J, J', Y, Y') at 40 digits, rounded to f64
pub const TABLE: &[(f64, f64, f64, f64, f64, f64)] = &[
    (0.0, 0.05, 0.9993750976494686, -0.0249921883137597, -1.9793110008172097, 12.78985517117497),
    (0.0, 0.7, 0.8812008886074053, -0.32899574154005895, -0.19066492933739512, 1.1032498719076334),
    (0.0, 1.0, 0.7651976865579666, -0.4400505857449335, 0.08825696421567696, 0.7812128213002887),
    (0.0, 2.0, 0.22389077914123567, -0.5767248077568734, 0.5103756726497451, 0.10703243154093754),
    (0.0, 3.3, -0.3442962603988846, -0.22066345298524115, 0.26909199505453385, -0.3878529310237099),
    (0.0, 7.5, 0.2663396578803784, -0.1352484275797055, 0.11731328614820863, 0.25912851048611624),
    (0.0, 12.0, 0.047689310796833535, 0.2234471044906276, -0.22523731263436145, 0.05709921826089652),
    (0.0, 24.9, 0.0832459683530155, 0.13485569953140886, -0.13649918399676522, 0.08600255759555425),
    (0.0, 25.1, 0.10827567149994945, 0.11463478413442257, -0.11676770763803694, 0.11062223322783099),
    (0.0, 40.0, 0.00736689058423729, -0.126038318037585, 0.12593641705826092, 0.005793505821549633),
    (0.0, 99.0, -0.05447423527049907, 0.05912294255307407, -0.058847076763805434, -0.05417773003347098),
    (0.0, 150.0, -0.0007740903753942912, 0.06514516365772736, -0.06514222150903735, -0.00055695634956084),
    (0.0, 333.3, 0.038466654416718676, 0.020687550206813364, -0.020745232486426936, 0.038497818590544026),
    (0.0, 700.0, -0.006288272465068767, -0.029489824084030333, 0.02949430818089382, -0.00630934142145256),
    (0.0, 1000.0, 0.024786686152420176, -0.004728311907089524, 0.0047159179776228135, 0.024784331292351778),
    (0.0, 1999.0, 0.017613159806480084, -0.002875940435499709, 0.0028715348532521263, 0.017612442114652144),
    (0.0, 2100.0, 0.014062116158481713, -0.010270244395882472, 0.01026689598216571, 0.014059672058162836),
    (1.0, 0.05, 0.0249921883137597, 0.4995313313742746, -12.78985517117497, 253.81779242268217),
    (1.0, 0.7, 0.32899574154005895, 0.4112069721216068, -1.1032498719076334, 1.3854063162449384),
    (1.0, 1.0, 0.4400505857449335, 0.32514710081303305, -0.7812128213002887, 0.8694697855159657),
    (1.0, 2.0, 0.5767248077568734, -0.06447162473720103, -0.10703243154093754, 0.5638918884202139),
    (1.0, 3.3, 0.22066345298524115, -0.4111639734247153, 0.3878529310237099, 0.1515608038352278),
    (1.0, 7.5, 0.1352484275797055, 0.24830653420308432, -0.25912851048611624, 0.15186375421302414),
    (1.0, 12.0, -0.2234471044906276, 0.06630990283771918, -0.05709921826089652, -0.2204790444459534),
    (1.0, 24.9, -0.13485569953140886, 0.08866185990046163, -0.08600255759555425, -0.13304526602104016),
    (1.0, 25.1, -0.11463478413442257, 0.11284279437383082, -0.11062223322783099, -0.11236044735007555),
    (1.0, 40.0, 0.126038318037585, 0.004215932633297665, -0.005793505821549633, 0.12608125470379966),
    (1.0, 99.0, -0.05912294255307407, -0.053877033830569035, 0.05417773003347098, -0.059394326562123324),
    (1.0, 150.0, -0.06514516365772736, -0.0003397892843427755, 0.00055695634956084, -0.06514593455136776),
    (1.0, 333.3, -0.020687550206813364, 0.038528723274224866, -0.038497818590544026, -0.020629727480154677),
    (1.0, 700.0, 0.029489824084030333, -0.00633040078518881, 0.00630934142145256, 0.02948529483600603),
    (1.0, 1000.0, 0.004728311907089524, 0.024781957840513087, -0.024784331292351778, 0.004740702308915165),
    (1.0, 1999.0, 0.002875940435499709, 0.017611721116917556, -0.017612442114652144, 0.002880345479622638),
    (1.0, 2100.0, 0.010270244395882472, 0.014057225565912245, -0.014059672058162836, 0.010273591064098168),
    (2.0, 0.05, 0.00031243490091938445, 0.012494792276984322, -509.6148958461815, 20371.805978676086),
    (2.0, 0.7, 0.058786944364191705, 0.16103304335665405, -2.961477561827272, 7.358114590456002),
    (2.0, 1.0, 0.11490348493190047, 0.21024361588113255, -1.6506826068162543, 2.52015239233222),
    (2.0, 2.0, 0.35283402861563773, 0.22389077914123567, -0.6174081041906827, 0.5103756726497451),
    (2.0, 3.3, 0.4780316864505459, -0.06905272062115032, -0.03402961261592178, 0.40847693866972307),
    (2.0, 7.5, -0.23027341052579026, 0.1966546703865829, -0.18641422227783963, -0.2094180512120257),
    (2.0, 12.0, -0.08493049487860481, -0.20929202201086014, 0.21572077625754535, -0.09305268097048741),
    (2.0, 24.9, -0.09407775144790777, -0.12729925363197853, 0.1295913480453151, -0.09641150121365186),
    (2.0, 25.1, -0.1174099172477122, -0.10527941224217459, 0.10795318706211415, -0.11922408080250144),
    (2.0, 40.0, -0.0010649746823580396, 0.1260915667717029, -0.1262260923493384, 0.0005177987959172876),
    (2.0, 99.0, 0.05327983239063899, -0.060199302803390004, 0.05994157636044121, 0.052966789096896415),
    (2.0, 150.0, -9.451180670874022e-05, -0.06514390350030458, 0.06514964759369817, -0.00031170561835513555),
    (2.0, 333.3, -0.038590792131731055, -0.02045598229723202, 0.020514222473882415, -0.03862091623515178),
    (2.0, 700.0, 0.006372529105308854, 0.02947161685801516, -0.02947628149111824, 0.006393559368570041),
    (2.0, 1000.0, -0.024777229528605997, 0.004777866366146736, -0.0047654866402075165, -0.024774800319071363),
    (2.0, 1999.0, -0.017610282427355024, 0.0028935595274730505, -0.002889156105993149, -0.017609551513245447),
    (2.0, 2100.0, -0.014052334973342778, 0.01028362757204756, -0.010280286146030626, -0.01404988130945233),
    (3.0, 0.05, 2.6037597910554327e-06, 0.00015620931345605854, -40756.40181252335, 2444874.4938555546),
    (3.0, 0.7, 0.006929654826750839, 0.029088423678116676, -15.819479052819636, 64.83628980739975),
    (3.0, 1.0, 0.019563353982668407, 0.05621342298389526, -5.821517605964729, 15.813870211077932),
    (3.0, 2.0, 0.12894324947440206, 0.15941915440403465, -1.1277837768404277, 1.074267561069959),
    (3.0, 3.3, 0.3587688942275418, 0.15187814624368973, -0.4291009463157363, 0.3560621567620203),
    (3.0, 7.5, -0.2580609131934603, -0.12704904524840613, 0.15970759193793513, -0.2502972590530137),
    (3.0, 12.0, 0.19513693953109268, -0.13371472976137797, 0.12900614368007832, 0.18346924033752576),
    (3.0, 24.9, 0.11974280773254818, -0.10850459575303406, 0.10682044483174945, 0.11672141493305613),
    (3.0, 25.1, 0.0959240403499266, -0.12887494199073132, 0.12782592837717188, 0.09267518765448406),
    (3.0, 40.0, -0.1261448155058208, 0.008395886480578521, -0.006829103413384208, -0.1257139095933346),
    (3.0, 99.0, 0.061275663053705944, 0.05142299411628427, -0.051755848160321846, 0.061509935395602476),
    (3.0, 150.0, 0.06514264334288179, -0.0013973646735663762, 0.0011803675862711112, 0.06512604024197274),
    (3.0, 333.3, 0.020224414387650675, -0.03877283006501324, 0.03874401387975954, 0.02016549147586478),
    (3.0, 700.0, -0.029453409631999994, 0.0064987580037317106, -0.006477777315687522, -0.029448519588336722),
    (3.0, 1000.0, -0.0048274208252039475, -0.024762747266130383, 0.024765269345790947, -0.00483978244824489),
    (3.0, 1999.0, -0.002911178619446392, -0.01760591347494965, 0.01760666091183875, -0.002915579308962392),
    (3.0, 2100.0, -0.010297010748212649, -0.014037624957988189, 0.014040090560741824, -0.010300343418260258),
    (5.0, 0.05, 8.137173160673097e-11, 8.1368341067459e-09, -782400620.0153003, 78235171742.92741),
    (5.0, 0.7, 4.288240705888548e-05, 0.0003037941003948832, -1499.9983172514862, 10581.639637476848),
    (5.0, 1.0, 0.00024975773021123444, 0.001227850313053783, -260.4058666258122, 1268.750910100089),
    (5.0, 2.0, 0.007039629755871685, 0.01639664541788922, -9.935989128481975, 22.074029594874336),
    (5.0, 3.3, 0.06371690931952849, 0.07773462226691119, -1.379757056447809, 1.3443870684779302),
    (5.0, 7.5, 0.28347390516255044, -0.1651579234706783, 0.1754180569454651, 0.19723492453121097),
    (5.0, 12.0, -0.07347096310165858, 0.21311186593650888, -0.22981794662508243, -0.05546022665705518),
    (5.0, 24.9, -0.08024676273394245, 0.13904524783606043, -0.14018638276614212, -0.0757016057633389),
    (5.0, 25.1, -0.05119417047462766, 0.1505380086609671, -0.1524943549100337, -0.04701982671099066),
    (5.0, 40.0, 0.12257346597711778, -0.0331784308906548, 0.031869448780850365, 0.12121804573972449),
    (5.0, 99.0, -0.06528100898032652, -0.046269135186357495, 0.046658612246724775, -0.06543478999878015),
    (5.0, 150.0, -0.06499863174072584, 0.004866838598448207, -0.004652497340417635, -0.06494734964556674),
    (5.0, 333.3, -0.019289404054658288, 0.03924423799611508, -0.03921966369620951, -0.019228406687024916),
    (5.0, 700.0, 0.02937769549597537, -0.006834827584268678, 0.006814014546379581, 0.029372086153081064),
    (5.0, 1000.0, 0.0050254069452331865, 0.024723137968928607, -0.02472595671974069, 0.005037708039880966),
    (5.0, 1999.0, 0.002981620018235964, 0.01759408674360922, -0.017594887014842527, 0.002986011734079815),
    (5.0, 2100.0, 0.010350431376565538, 0.01399827105840368, -0.014000774748587578, 0.010353735868462718),
    (10.0, 0.05, 2.627921438978775e-23, 5.255783152187507e-21, -1.2112763365186743e+21, 2.4225190261803684e+23),
    (10.0, 0.7, 7.517591150215391e-12, 1.0715474084443844e-10, -4244719426.0703893, 60473494571.06642),
    (10.0, 1.0, 2.6306151236874534e-10, 2.6186350562244217e-09, -121618014.27868919, 1209399937.84816),
    (10.0, 2.0, 2.515386282716737e-07, 1.234650293774696e-06, -129184.54220803929, 631362.8816642854),
    (10.0, 3.3, 3.209600151017725e-05, 9.23429539840028e-05, -1051.4531695258759, 2985.4432445544744),
    (10.0, 7.5, 0.03899825788941221, 0.036921551307968516, -1.2769419280524374, 0.9676319262465898),
    (10.0, 12.0, 0.3004760352712693, -0.02001578649157339, -0.0228763140704997, 0.17808253848643674),
    (10.0, 24.9, -0.08868880155802568, 0.13182397733951753, -0.14154908531382956, -0.0778846437773675),
    (10.0, 25.1, -0.06109503451421172, 0.14333315129546376, -0.1546131928002861, -0.0524124654985204),
    (10.0, 40.0, 0.11938336278226096, 0.04365426494208726, -0.04672387723267787, 0.11622890719421455),
    (10.0, 99.0, 0.019217738228763877, -0.0777648941242348, 0.07806504567116426, 0.018721388307160296),
    (10.0, 150.0, -0.020612788945218587, -0.061670037612375155, 0.06187635520812076, -0.020774222446095215),
    (10.0, 333.3, -0.041144483338332774, -0.014697765756539093, 0.014766175016775511, -0.04114817840089408),
    (10.0, 700.0, 0.008377643454381674, 0.028962853548084085, -0.02897178785272443, 0.008397489036915161),
    (10.0, 1000.0, -0.02452062230603656, 0.005960965395042097, -0.005949000574162668, -0.02451642451431248),
    (10.0, 1999.0, -0.017535943227333983, 0.003315506513856863, -0.003311161553073175, -0.01753489613077771),
    (10.0, 2100.0, -0.013813781541559851, 0.010601996525622917, -0.010598827323949234, -0.01381110172604198),
    (20.0, 0.05, 3.738200843297966e-51, 1.4952758870740665e-48, -4.257541217596949e+48, 1.703010885000624e+51),
    (20.0, 0.7, 3.1095858376600627e-28, 8.879346946797132e-27, -5.121349559507606e+25, 1.4622989866174435e+27),
    (20.0, 1.0, 3.8735030085246576e-25, 7.737778395067218e-24, -4.113970314835505e+22, 8.217106465808355e+23),
    (20.0, 2.0, 3.918972805090754e-19, 3.90027046827299e-18, -4.081651388998366e+16, 4.060105807168222e+17),
    (20.0, 3.3, 8.073910612544689e-15, 4.829463187125377e-14, -1998693563673.9812, 11938318032006.572),
    (20.0, 7.5, 6.29609082847652e-08, 1.5628907051501085e-07, -272761.75448916876, 671098.2478749562),
    (20.0, 12.0, 0.00025121327024539954, 0.000340299511572871, -79.34969740197076, 103.69270859977478),
    (20.0, 24.9, 0.06422099357756961, -0.12144173734225179, 0.19556675860860548, 0.02829436447773983),
    (20.0, 25.1, 0.039629272494917156, -0.12419569043989641, 0.19979353826068924, 0.01387462045586414),
    (20.0, 40.0, 0.1277939335508489, -0.041252643758821116, 0.045161820565805894, 0.10996179101331995),
    (20.0, 99.0, 0.07763240401855474, 0.02232893388087728, -0.023215982597942723, 0.07615524323278189),
    (20.0, 150.0, 0.06344724095386198, 0.01566633314903309, -0.016024629052560344, 0.06293551269409037),
    (20.0, 333.3, 0.043499656715052584, -0.004669784508234898, 0.0046125993500981954, 0.04341437656664716),
    (20.0, 700.0, -0.014349546169161965, -0.026510380650499196, 0.02653146327039546, -0.014362658214095124),
    (20.0, 1000.0, 0.023357967932679333, -0.009557151199817548, 0.009547376014987301, 0.02334852320213275),
    (20.0, 1999.0, 0.017238688944375483, -0.004620644437539075, 0.004616563098434477, 0.01723667183169294),
    (20.0, 2100.0, 0.013022355562467298, -0.011560443096518162, 0.011557866104943103, 0.013019013213036444),
    (50.0, 0.05, 2.593702967352047e-145, 2.593701695928724e-142, -2.454483411626033e+142, 2.4544821593382448e+145),
    (50.0, 0.7, 5.239431449834897e-88, 3.742091450160818e-86, -1.2151742061284947e+85, 8.678947731272688e+86),
    (50.0, 1.0, 2.9060049481732392e-80, 1.4527175447784315e-78, -2.191142812605339e+77, 1.0953477965307032e+79),
    (50.0, 2.0, 3.2240958394363844e-65, 8.053915456508205e-64, -1.9761505765184133e+62, 4.936341764751018e+63),
    (50.0, 3.3, 2.333064582897141e-54, 3.5273904231455943e-53, -2.7346497191424044e+51, 4.134189466639211e+52),
    (50.0, 7.5, 1.2543492639479537e-36, 8.269602640592537e-36, -5.1334030687516075e+33, 3.382744659932608e+34),
    (50.0, 12.0, 1.305594224957342e-26, 5.284234127456844e-26, -5.022967081757743e+23, 2.0304251593674142e+24),
    (50.0, 24.9, 8.19551544761145e-12, 1.432359383238966e-11, -895880446.9592009, 1553878040.74195),
    (50.0, 25.1, 1.160331678457032e-11, 2.006613165615341e-11, -634459818.3998702, 1088670035.6894507),
    (50.0, 40.0, 0.0006818524353176831, 0.0005251830905473358, -15.615608873419951, 11.313944455847244),
    (50.0, 99.0, 0.03331951309311864, -0.0689523851936264, 0.07962353196468917, 0.028219809276733072),
    (50.0, 150.0, -0.057300163341716066, 0.03312213558198988, -0.034903029093935285, -0.05389284731173212),
    (50.0, 333.3, 0.04363079745295095, -0.005323134752898725, 0.005316329484007526, 0.043128956923832375),
    (50.0, 700.0, 0.027500382679863405, -0.012458438647749372, 0.012470544801510169, 0.02742119297512607),
    (50.0, 1000.0, -0.0033360489606152764, 0.024996115149198257, -0.025025741518044504, -0.00331933248558409),
    (50.0, 1999.0, -0.012601105385500673, 0.012639647357157809, -0.012640447846646872, -0.012593999706454804),
    (50.0, 2100.0, -0.00588730897918959, 0.016385101179105268, -0.01638834405839022, -0.005881735972017105),
    (100.0, 0.7, 2.7307002738072006e-204, 3.9009057618005934e-202, -1.165699834932405e+201, 1.665244266344177e+203),
    (100.0, 1.0, 8.431828789626709e-189, 8.431411362229889e-187, -3.775287810110528e+185, 3.775097134095561e+187),
    (100.0, 2.0, 1.0609531124391725e-158, 5.303715011584573e-157, -3.000826048857451e+155, 1.5001098794375103e+157),
    (100.0, 3.3, 5.843628762621546e-137, 1.769841690093013e-135, -5.450095787161476e+133, 1.6506355735912935e+135),
    (100.0, 7.5, 2.3583800455568583e-101, 3.135738380767485e-100, -1.3535096660980841e+98, 1.7995451712033604e+99),
    (100.0, 12.0, 4.898370445750787e-81, 4.052773744905893e-80, -6.545585221041397e+77, 5.414835823906831e+78),
    (100.0, 24.9, 7.504343213823952e-50, 2.9198535453189403e-49, -4.379634902521033e+46, 1.7029027417560956e+47),
    (100.0, 25.1, 1.6286663737874337e-49, 6.283145401199139e-49, -2.019064176240608e+46, 7.783830964332064e+46),
    (100.0, 40.0, 2.386606299602622e-30, 5.474008962156948e-30, -1.455243943810252e+27, 3.3308702486753717e+27),
    (100.0, 99.0, 0.0776871617004594, 0.018218135564885156, -0.20107219957383568, 0.03562161495475956),
    (100.0, 150.0, -0.015359526118405391, -0.054976798213053873, 0.07387607124501987, -0.011892421209163595),
    (100.0, 333.3, -0.020875550476278582, -0.0377213292021391, 0.03957908440011989, -0.019979097098910978),
    (100.0, 700.0, -0.026762563310604615, -0.014069875369693539, 0.014235393485742565, -0.026498455968304885),
    (100.0, 1000.0, 0.011676135007802554, 0.02232031887662102, -0.022438688257723275, 0.011628941870864861),
    (100.0, 1999.0, -0.015853711614452468, -0.008203288972643906, 0.00821755273152438, -0.015835923293234425),
    (100.0, 2100.0, -0.017275186717675604, -0.0022437653198784323, 0.0022504407108068594, -0.017256126756049917),
    (200.0, 7.5, 7.567897347062068e-261, 2.016693548713552e-259, -2.1045075347085034e+257, 5.6080528956298e+258),
    (200.0, 12.0, 4.52421073488043e-220, 7.526834122571625e-219, -3.52419934466595e+216, 5.863030121611533e+217),
    (200.0, 24.9, 6.330383238228169e-157, 5.045283749744989e-156, -2.5338588131384707e+153, 2.0193125686226855e+154),
    (200.0, 25.1, 3.0965796734440977e-156, 2.4479842103351314e-155, -5.180662569351453e+152, 4.095214305135009e+153),
    (200.0, 40.0, 2.757585029973633e-116, 1.3510781067089152e-115, -5.890550048173484e+112, 2.885459928213084e+113),
    (200.0, 99.0, 3.5956268962751244e-42, 6.317391910997966e-42, -5.09427642501097e+38, 8.933765309577066e+38),
    (200.0, 150.0, 8.057702198396854e-14, 7.14010206961628e-14, -29864935180.406555, 26207781187.275146),
    (200.0, 333.3, 0.013693303435372029, 0.037490921674804244, -0.046905923537242364, 0.011064095485132364),
    (200.0, 700.0, 0.019996746420033372, 0.022441486028290502, -0.023433873827163523, 0.019181413692514113),
    (200.0, 1000.0, 0.004183531525022076, -0.02463864943053019, 0.025144488299691112, 0.004085911612996323),
    (200.0, 1999.0, -0.013087874419563616, 0.012139754038993596, -0.012197649754931999, -0.013019123457572045),
    (200.0, 2100.0, -0.012923430664075504, 0.011676755644866326, -0.011726954736215857, -0.012861870192475046),
    (500.0, 99.0, 1.2069677283465975e-289, 5.975360347136896e-289, -5.381073330070125e+285, 2.663797428484959e+286),
    (500.0, 150.0, 3.2504242494865875e-202, 1.0336759427101672e-201, -2.0531443464067873e+198, 6.527904467630464e+198),
    (500.0, 333.3, 1.4558150669252718e-49, 1.6296809611776155e-49, -5.866484490114192e+45, 6.553033661696814e+45),
    (500.0, 700.0, 0.019953825027448576, -0.021040382355037225, 0.03002217443630638, 0.013921079693559964),
    (500.0, 1000.0, -0.01903320932167545, -0.01670950029253788, 0.019309109280363546, -0.01649612526675361),
    (500.0, 1999.0, 0.017798427484710787, -0.0033783070714817473, 0.003484311925799619, 0.017231749568294482),
    (500.0, 2100.0, -0.012923307896732832, 0.011703264829933752, -0.012046436126482804, -0.012548616933585555),
    (1000.0, 700.0, 2.361412314411301e-81, 2.4107380435382114e-81, -1.8875310998094588e+77, 1.9243675144213105e+77),
    (1000.0, 1000.0, 0.04473067294796404, 0.004099555822257741, -0.07747600152072075, 0.007131629332274125),
    (1000.0, 1999.0, -0.0018117211414167297, 0.016532254503347242, -0.019092287129088514, -0.0015623656479921307),
    (1000.0, 2100.0, 0.0017255977459669507, 0.016255917505136944, -0.01848705512808479, 0.0015230835153027349),
    (2000.0, 1999.0, 0.03292320146927471, 0.0025690346492217454, -0.06599347878551856, 0.00452354511332905),
    (2000.0, 2100.0, 0.01743576905843471, -0.008055640982331204, 0.026269094126084153, 0.0052500053790807385),
    (0.5, 0.05, 0.17833808240219742, 1.7804080271470641, -3.563788851169038, 35.816226594092576),
    (0.5, 0.7, 0.6143610667912651, 0.2905658251022306, -0.7293951585245628, 1.1353576085945243),
    (0.5, 1.0, 0.6713967071418031, 0.09540051444747454, -0.4310988680183761, 0.8869461411509911),
    (0.5, 2.0, 0.5130161365618278, -0.3630397445467054, 0.23478571040624846, 0.45431970896026563),
    (0.5, 3.3, -0.06928522075415751, -0.4232240864590357, 0.43372184717936263, -0.13500065214497003),
    (0.5, 7.5, 0.273282774005506, 0.08277204772988465, -0.10099089933025172, 0.2800155006275228),
    (0.5, 12.0, -0.12358853595594195, 0.1995139261650321, -0.19436440383353454, -0.11549001912954467),
    (0.5, 24.9, -0.036879562587177, 0.15632640434738332, -0.15558585088177737, -0.03375534871404894),
    (0.5, 25.1, -0.005213394369269952, 0.15927721100105385, -0.15917335852357836, -0.002042610334935722),
    (0.5, 40.0, 0.09400096238953358, -0.08531366770626458, 0.08413865567639542, 0.09294922919357863),
    (0.5, 99.0, -0.08012681128561518, 0.0035979338126392885, -0.003193252947560424, -0.08011068374547597),
    (0.5, 150.0, -0.04657205589560011, 0.04570933358571555, -0.04555409339939689, -0.04642020891760212),
    (0.5, 333.3, 0.012546646215519415, 0.04184562596376258, -0.04186444781527101, 0.012609449167537524),
    (0.5, 700.0, 0.016404628821627593, -0.025316756040763132, 0.025305038448747683, 0.016386553794164205),
    (0.5, 1000.0, 0.020863266605093828, 0.014179137737624747, -0.014189569370927295, 0.020870361389779293),
    (0.5, 1999.0, 0.014485518522436257, 0.010419374164636383, -0.010422997355862605, 0.014488125575301656),
    (0.5, 2100.0, 0.01720336941717657, 0.002678505915254389, -0.002682601955591812, 0.017204008131927902),
    (1.5, 0.05, 0.0029727968749101476, 0.08915417615489302, -71.45411510578296, 2140.0596643223193),
    (1.5, 0.7, 0.1482635083201016, 0.29665354896247587, -1.6563541503977834, 2.819935163756402),
    (1.5, 1.0, 0.240297839123427, 0.3109499484566626, -1.1024955751601793, 1.2226444947218926),
    (1.5, 2.0, 0.49129377868716234, 0.144545802546456, -0.3956232813587035, 0.5315031714252761),
    (1.5, 3.3, 0.4127263257387088, -0.25688809608993424, 0.20071608353578255, 0.3424872637540069),
    (1.5, 7.5, -0.06455319612951758, 0.2861934132314095, -0.2867482272495396, -0.04364125388034381),
    (1.5, 12.0, -0.20466344849652968, -0.09800560489387573, 0.1073915023031474, -0.20778834162142795),
    (1.5, 24.9, -0.1570669578129893, -0.027417697658683668, 0.03063113484092088, -0.15743109996857982),
    (1.5, 25.1, -0.15938106347852934, 0.004311370380442957, -0.001128173699398508, -0.1591059377845705),
    (1.5, 40.0, 0.08648867973613376, 0.09075763689942856, -0.09189749599762369, 0.08758481177630631),
    (1.5, 99.0, -0.004002614677718153, -0.08006616560868005, 0.08009455620533679, -0.0044068068294594665),
    (1.5, 150.0, -0.04586457377203422, -0.046113410157879765, 0.04626836193960413, -0.04601677701879293),
    (1.5, 333.3, -0.04182680411225415, 0.012734885657968804, -0.012672252119555633, -0.041807416977649246),
    (1.5, 700.0, 0.02532847363277858, 0.016350353520985926, -0.016368478766700813, 0.025340113760390613),
    (1.5, 1000.0, -0.0141687061043222, 0.02088451966425031, -0.020877456174464754, -0.014158253186665597),
    (1.5, 1999.0, -0.010415750973410161, 0.01449333424352686, -0.014490732628167054, -0.010412123869648373),
    (1.5, 2100.0, -0.002674409874916966, 0.017205279709944368, -0.01720464684667923, -0.0026703129221298983),
    (2.5, 0.05, 2.9730092411405302e-05, 0.0014862922543398822, -4283.683117495808, 214112.70175968463),
    (2.5, 0.7, 0.021053968866313298, 0.07307076236898269, -6.369265486037367, 21.091022585449956),
    (2.5, 1.0, 0.04949681022847794, 0.11655581355223216, -2.8763878574621615, 6.088474068495224),
    (2.5, 2.0, 0.22392453146891578, 0.21138811435101765, -0.8282206324443038, 0.6396525091966762),
    (2.5, 3.3, 0.44449097142571103, 0.07599074132529138, -0.25125268032865117, 0.3910590231787001),
    (2.5, 7.5, -0.29910405245731303, 0.035148154689586764, -0.013708391569564108, -0.28217876339301823),
    (2.5, 12.0, 0.07242267383180952, -0.21975150554482334, 0.22121227940932137, 0.06130561075953878),
    (2.5, 24.9, 0.017955832730190337, -0.15886975226381161, 0.1592763490553823, 0.014639533530139524),
    (2.5, 25.1, -0.013836135130155866, -0.1580029623699481, 0.1590385170455626, -0.01696866344497247),
    (2.5, 40.0, -0.08751431140932354, 0.09195832419921648, -0.0910309678762172, -0.08620806050536012),
    (2.5, 99.0, 0.08000551993174493, -0.006022956090135955, 0.005620360711358508, 0.07995262790454491),
    (2.5, 150.0, 0.04565476442015942, -0.04662548651237021, 0.04647946063818897, 0.04549370426230098),
    (2.5, 333.3, -0.012923125100418193, -0.04172987098068786, 0.04175038614002749, -0.012985411331527036),
    (2.5, 700.0, -0.01629607822034426, 0.02538667391213695, -0.025375189072033545, -0.01627785309144355),
    (2.5, 1000.0, -0.020905772723406796, -0.014116441672513684, 0.0141269370024039, -0.020912773516970764),
    (2.5, 1999.0, -0.014501149964617464, -0.010397615468201785, 0.01040125038343414, -0.014503740695179854),
    (2.5, 2100.0, -0.017207190002712165, -0.0026539251249137375, 0.0026580238886679845, -0.01720781116083241),
    (10.5, 0.05, 1.2671282747986545e-24, 2.6609418306905634e-22, -2.39246291956388e+22, 5.024109171046322e+24),
    (10.5, 0.7, 1.356939253660618e-12, 2.0312755404861563e-11, -22391162371.565704, 335041242234.94995),
    (10.5, 1.0, 5.678187477634622e-11, 5.937366005812904e-10, -536349976.62759936, 5603357792.8884535),
    (10.5, 2.0, 7.701527305196463e-08, 3.975860061112482e-07, -401042.5658234918, 2062720.391190884),
    (10.5, 3.3, 1.2712878685630385e-05, 3.8590237254821124e-05, -2513.504677896132, 7544.974120057845),
    (10.5, 7.5, 0.024603821190467997, 0.025455664754894393, -1.8059004990632508, 1.5815526510939808),
    (10.5, 12.0, 0.29469968409768454, 0.022767311258373904, -0.11411114916553053, 0.17120358917477543),
    (10.5, 24.9, -0.1520546124997286, 0.0682375033998391, -0.07112492530051542, -0.13622521184129102),
    (10.5, 25.1, -0.13604643837241598, 0.09138805488447747, -0.09694780075788546, -0.12130759765101119),
    (10.5, 40.0, 0.06623123551101201, 0.10528995020549058, -0.11002406311514011, 0.0653931056694627),
    (10.5, 99.0, 0.06655752476232332, -0.0452189918937761, 0.04513297479112046, 0.06595249967064407),
    (10.5, 150.0, 0.027169788424993655, -0.059244680036375855, 0.05929878961609685, 0.02690466289245759),
    (10.5, 333.3, -0.019258497062834792, -0.039195843022235326, 0.03924419660426087, -0.019307890500873486),
    (10.5, 700.0, -0.014368579829941424, 0.026523375374107025, -0.026516086251632563, -0.01434802263019231),
    (10.5, 1000.0, -0.021612352348443217, -0.013010036062942527, 0.01302155963232475, -0.02161767513423562),
    (10.5, 1999.0, -0.014766877907708368, -0.010016788202188908, 0.01002061979243288, -0.014769181135766968),
    (10.5, 2100.0, -0.017267827891575015, -0.0022270427337810284, 0.0022311820506259366, -0.017268143778980206),
    (100.5, 0.7, 1.6094869324768e-205, 2.31070788142451e-203, -1.9679186722919724e+202, 2.825299726798349e+204),
    (100.5, 1.0, 5.940033324452156e-190, 5.969440871563626e-188, -5.332325922352799e+186, 5.3587195890526194e+188),
    (100.5, 2.0, 1.0570467136526164e-159, 5.3106182106507305e-158, -2.9969252275150788e+156, 1.505653697572471e+158),
    (100.5, 3.3, 7.479267820667705e-138, 2.2765608582136363e-136, -4.237007731230016e+134, 1.2896586307608843e+136),
    (100.5, 7.5, 4.5530739924098e-102, 6.084274649318149e-101, -6.975770581133506e+98, 9.32120415354053e+99),
    (100.5, 12.0, 1.1974864347014996e-81, 9.95791487708176e-81, -2.663986069877439e+78, 2.2149646468720958e+79),
    (100.5, 24.9, 2.6584802580710334e-50, 1.0398914078198725e-49, -1.2297268129708589e+47, 4.806970307449091e+47),
    (100.5, 25.1, 5.793560391162708e-50, 2.2469794263170394e-49, -5.645803373228647e+46, 2.1881766416358744e+47),
    (100.5, 40.0, 1.0856278541885117e-30, 2.5048060645995572e-30, -3.180235217959052e+27, 7.322603061188783e+27),
    (100.5, 99.0, 0.06870518225381797, 0.017326495956590162, -0.21908185827532642, 0.03834618777205243),
    (100.5, 150.0, 0.016091099782758304, -0.05494481120126188, 0.07387570035844535, 0.011499860775605822),
    (100.5, 333.3, 0.006568465817279484, -0.0422237722092266, 0.044273483494799336, 0.006189701107165982),
    (100.5, 700.0, -0.010917013911551757, -0.027979722133354278, 0.028280664784424217, -0.01082454196822116),
    (100.5, 1000.0, -0.006390163952960382, 0.02435430400057221, -0.024474988493919558, -0.006345449424247167),
    (100.5, 1999.0, -0.005824852838958787, -0.016857461106466867, 0.016880267894212302, -0.005821719825079597),
    (100.5, 2100.0, -0.010950780361368387, -0.01353104774597336, 0.013549185455398398, -0.01094146657005688),
    (1000.5, 700.0, 1.508026653281919e-81, 1.5410326176887066e-81, -2.952782440195644e+77, 3.013364593729278e+77),
    (1000.5, 1000.0, 0.04267543252886588, 0.004089400741984112, -0.0810319100061621, 0.007152776231559482),
    (1000.5, 1999.0, -0.011112682796744306, 0.013537124209822482, -0.015632256857605754, -0.009615438498272379),
    (1000.5, 2100.0, -0.007977999559010482, 0.014744716747664687, -0.016767557703090574, -0.007009198641862701),
];
